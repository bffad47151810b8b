#ifndef KDOM_GRAPH_HH
#define KDOM_GRAPH_HH

#include <kdom/multiset.hh>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdom
{
    using Edge = std::pair<Id, Id>;

    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Raised by the edge-list reader; line is 1-based, 0 when the error is not tied to a line.
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _line;

        public:
            ParseError(std::size_t line, const std::string & message);

            [[nodiscard]] auto line() const noexcept -> std::size_t { return _line; }
    };

    /// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
    class Graph
    {
        private:
            std::vector<std::vector<Id>> _adj;
            std::size_t _edge_count = 0;

        public:
            Graph() = default;
            explicit Graph(std::size_t n);

            /// Throws GraphError on self-loops, duplicate edges or out-of-range ids.
            static auto from_edges(std::size_t n, const std::vector<Edge> & edges) -> Graph;

            auto add_edge(Id u, Id v) -> void;

            [[nodiscard]] auto order() const -> std::size_t { return _adj.size(); }
            [[nodiscard]] auto size() const -> std::size_t { return _edge_count; }
            [[nodiscard]] auto adjacent(Id u, Id v) const -> bool;
            [[nodiscard]] auto degree(Id v) const -> std::size_t;
            [[nodiscard]] auto max_degree() const -> std::size_t;
            [[nodiscard]] auto neighbours(Id v) const -> const std::vector<Id> &;

            /// N[v], sorted.
            [[nodiscard]] auto closed_neighbourhood(Id v) const -> std::vector<Id>;

            /// Edges (u, v) with u < v in lexicographic order.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            /// The full vertex set as a multiset with multiplicity one.
            [[nodiscard]] auto vertex_multiset() const -> Multiset;

            auto operator== (const Graph &) const -> bool = default;
    };

    /// True iff |a|_{N[b]} >= |b_set|_b for every b. Throws GraphError on ids outside the graph.
    auto dominates(const Graph & graph, const Multiset & a, const Multiset & b) -> bool;

    /// Generators. Vertices are labelled 0..n-1: paths and cycles in ring order,
    /// stars with centre 0, grids row-major.
    auto make_path(std::size_t n) -> Graph;
    auto make_cycle(std::size_t n) -> Graph;
    auto make_complete(std::size_t n) -> Graph;
    auto make_star(std::size_t n) -> Graph;
    auto make_grid(std::size_t rows, std::size_t cols) -> Graph;

    /// G(n, p): pairs (u, v), u < v, are visited in lexicographic order and each is
    /// kept when the next 53-bit draw from mt19937_64(seed), scaled to [0, 1), is below p.
    auto make_random_gnp(std::size_t n, double p, std::uint64_t seed) -> Graph;

    /// Vertices of the second graph are shifted by the order of the first.
    auto disjoint_union(const Graph & first, const Graph & second) -> Graph;

    enum class Family
    {
        path,
        cycle,
        complete,
        star,
        grid,
        random_gnp
    };

    auto family_name(Family f) -> std::string_view;
    auto parse_family(std::string_view name) -> Family;

    /// Parameters for `generate`; fields a family does not use are ignored.
    struct FamilyParams
    {
        std::size_t n = 1;
        std::size_t cols = 1;
        double p = 0.5;
        std::uint64_t seed = 0;
    };

    auto generate(Family family, const FamilyParams & params) -> Graph;

    auto parse_edge_list(std::string_view text) -> Graph;
    auto serialize_edge_list(const Graph & graph) -> std::string;
    auto read_edge_list_file(const std::string & filename) -> Graph;
}

#endif
