#ifndef KDOM_PRODUCT_HH
#define KDOM_PRODUCT_HH

#include <kdom/graph.hh>
#include <kdom/multiset.hh>

#include <string>
#include <vector>

namespace kdom
{
    enum class Side
    {
        onto_g,
        onto_h
    };

    /// The Cartesian product G□H. Product vertex (g, h) has id g * |V(H)| + h.
    class ProductGraph
    {
        private:
            Graph _g, _h, _graph;

        public:
            ProductGraph(Graph g, Graph h);

            [[nodiscard]] auto g() const -> const Graph & { return _g; }
            [[nodiscard]] auto h() const -> const Graph & { return _h; }
            [[nodiscard]] auto graph() const -> const Graph & { return _graph; }

            [[nodiscard]] auto index(Id g, Id h) const -> Id;
            [[nodiscard]] auto g_of(Id v) const -> Id { return v / _h.order(); }
            [[nodiscard]] auto h_of(Id v) const -> Id { return v % _h.order(); }

            /// Neighbours of v that differ from it in the G coordinate.
            [[nodiscard]] auto g_neighbourhood(Id v) const -> std::vector<Id>;

            /// Neighbours of v that differ from it in the H coordinate.
            [[nodiscard]] auto h_neighbourhood(Id v) const -> std::vector<Id>;

            [[nodiscard]] auto g_edges() const -> std::vector<Edge>;
            [[nodiscard]] auto h_edges() const -> std::vector<Edge>;

            /// "(g,h)"
            [[nodiscard]] auto render(Id v) const -> std::string;
    };

    auto cartesian_product(const Graph & g, const Graph & h) -> ProductGraph;

    /// Per-fibre maximum projection.
    auto phi_projection(const ProductGraph & pg, const Multiset & a, Side side) -> Multiset;

    /// Per-fibre sum projection; preserves cardinality.
    auto psi_projection(const ProductGraph & pg, const Multiset & a, Side side) -> Multiset;
}

#endif
