#include <kdom/graph.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace kdom
{
    using std::to_string;

    ParseError::ParseError(size_t line, const string & message) :
        std::runtime_error(line == 0 ? message : "line " + to_string(line) + ": " + message),
        _line(line)
    {
    }

    Graph::Graph(size_t n) :
        _adj(n)
    {
    }

    auto Graph::from_edges(size_t n, const vector<Edge> & edges) -> Graph
    {
        Graph result(n);
        for (auto & [u, v] : edges)
            result.add_edge(u, v);
        return result;
    }

    auto Graph::add_edge(Id u, Id v) -> void
    {
        if (u >= order() || v >= order())
            throw GraphError("edge " + to_string(u) + "-" + to_string(v) + " has a vertex outside 0.." + to_string(order()) + "-1");
        if (u == v)
            throw GraphError("self-loop at vertex " + to_string(u));
        if (adjacent(u, v))
            throw GraphError("duplicate edge " + to_string(u) + "-" + to_string(v));

        _adj[u].insert(std::lower_bound(_adj[u].begin(), _adj[u].end(), v), v);
        _adj[v].insert(std::lower_bound(_adj[v].begin(), _adj[v].end(), u), u);
        ++_edge_count;
    }

    auto Graph::adjacent(Id u, Id v) const -> bool
    {
        if (u >= order() || v >= order())
            return false;
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto Graph::degree(Id v) const -> size_t
    {
        return neighbours(v).size();
    }

    auto Graph::max_degree() const -> size_t
    {
        size_t result = 0;
        for (auto & a : _adj)
            result = std::max(result, a.size());
        return result;
    }

    auto Graph::neighbours(Id v) const -> const vector<Id> &
    {
        if (v >= order())
            throw GraphError("vertex " + to_string(v) + " out of range");
        return _adj[v];
    }

    auto Graph::closed_neighbourhood(Id v) const -> vector<Id>
    {
        auto & open = neighbours(v);
        vector<Id> result;
        result.reserve(open.size() + 1);
        auto pos = std::lower_bound(open.begin(), open.end(), v);
        result.insert(result.end(), open.begin(), pos);
        result.push_back(v);
        result.insert(result.end(), pos, open.end());
        return result;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Id u = 0 ; u < order() ; ++u)
            for (auto v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::vertex_multiset() const -> Multiset
    {
        Multiset result;
        for (Id v = 0 ; v < order() ; ++v)
            result.add(v);
        return result;
    }

    auto dominates(const Graph & graph, const Multiset & a, const Multiset & b) -> bool
    {
        if ((! a.empty() && a.max_element() >= graph.order()) || (! b.empty() && b.max_element() >= graph.order()))
            throw GraphError("multiset refers to a vertex outside the graph");

        for (auto & [v, needed] : b)
            if (a.count_over(graph.closed_neighbourhood(v)) < needed)
                return false;
        return true;
    }

    auto make_path(size_t n) -> Graph
    {
        if (n < 1)
            throw GraphError("path needs n >= 1");
        Graph result(n);
        for (Id v = 0 ; v + 1 < n ; ++v)
            result.add_edge(v, v + 1);
        return result;
    }

    auto make_cycle(size_t n) -> Graph
    {
        if (n < 3)
            throw GraphError("cycle needs n >= 3");
        auto result = make_path(n);
        result.add_edge(0, n - 1);
        return result;
    }

    auto make_complete(size_t n) -> Graph
    {
        if (n < 1)
            throw GraphError("complete graph needs n >= 1");
        Graph result(n);
        for (Id u = 0 ; u < n ; ++u)
            for (Id v = u + 1 ; v < n ; ++v)
                result.add_edge(u, v);
        return result;
    }

    auto make_star(size_t n) -> Graph
    {
        if (n < 1)
            throw GraphError("star needs n >= 1");
        Graph result(n);
        for (Id v = 1 ; v < n ; ++v)
            result.add_edge(0, v);
        return result;
    }

    auto make_grid(size_t rows, size_t cols) -> Graph
    {
        if (rows < 1 || cols < 1)
            throw GraphError("grid needs rows, cols >= 1");
        Graph result(rows * cols);
        for (size_t r = 0 ; r < rows ; ++r)
            for (size_t c = 0 ; c < cols ; ++c) {
                auto v = r * cols + c;
                if (c + 1 < cols)
                    result.add_edge(v, v + 1);
                if (r + 1 < rows)
                    result.add_edge(v, v + cols);
            }
        return result;
    }

    auto make_random_gnp(size_t n, double p, std::uint64_t seed) -> Graph
    {
        if (n < 1)
            throw GraphError("random graph needs n >= 1");
        if (! (p >= 0.0 && p <= 1.0))
            throw GraphError("edge probability must lie in [0, 1]");

        std::mt19937_64 rng(seed);
        Graph result(n);
        for (Id u = 0 ; u < n ; ++u)
            for (Id v = u + 1 ; v < n ; ++v) {
                double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (draw < p)
                    result.add_edge(u, v);
            }
        return result;
    }

    auto disjoint_union(const Graph & first, const Graph & second) -> Graph
    {
        Graph result(first.order() + second.order());
        for (auto & [u, v] : first.edges())
            result.add_edge(u, v);
        for (auto & [u, v] : second.edges())
            result.add_edge(u + first.order(), v + first.order());
        return result;
    }

    auto family_name(Family f) -> string_view
    {
        switch (f) {
            case Family::path: return "path";
            case Family::cycle: return "cycle";
            case Family::complete: return "complete";
            case Family::star: return "star";
            case Family::grid: return "grid";
            case Family::random_gnp: return "random";
        }
        return "unknown";
    }

    auto parse_family(string_view name) -> Family
    {
        for (auto f : {Family::path, Family::cycle, Family::complete, Family::star, Family::grid, Family::random_gnp})
            if (family_name(f) == name)
                return f;
        throw GraphError("unknown graph family '" + string(name) + "'");
    }

    auto generate(Family family, const FamilyParams & params) -> Graph
    {
        switch (family) {
            case Family::path: return make_path(params.n);
            case Family::cycle: return make_cycle(params.n);
            case Family::complete: return make_complete(params.n);
            case Family::star: return make_star(params.n);
            case Family::grid: return make_grid(params.n, params.cols);
            case Family::random_gnp: return make_random_gnp(params.n, params.p, params.seed);
        }
        throw GraphError("unknown graph family");
    }

    namespace
    {
        auto parse_id(string_view token, size_t line) -> size_t
        {
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw ParseError(line, "expected a nonnegative integer, got '" + string(token) + "'");
            return value;
        }

        auto split_words(string_view text) -> vector<string_view>
        {
            vector<string_view> words;
            size_t pos = 0;
            while (pos < text.size()) {
                while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
                    ++pos;
                auto start = pos;
                while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r')
                    ++pos;
                if (pos > start)
                    words.push_back(text.substr(start, pos - start));
            }
            return words;
        }
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        std::optional<Graph> result;
        size_t line_number = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_number;

            auto words = split_words(line);
            if (words.empty() || words[0].starts_with("#"))
                continue;

            if (! result) {
                if (words[0] != "n" || words.size() != 2)
                    throw ParseError(line_number, "expected header 'n <count>'");
                result.emplace(parse_id(words[1], line_number));
                continue;
            }

            if (words[0] == "n")
                throw ParseError(line_number, "repeated header");
            if (words[0] != "e" || words.size() != 3)
                throw ParseError(line_number, "expected 'e <u> <v>'");

            auto u = parse_id(words[1], line_number), v = parse_id(words[2], line_number);
            try {
                result->add_edge(u, v);
            }
            catch (const GraphError & e) {
                throw ParseError(line_number, e.what());
            }
        }

        if (! result)
            throw ParseError(0, "missing header 'n <count>'");
        return *result;
    }

    auto serialize_edge_list(const Graph & graph) -> string
    {
        string result = "n " + to_string(graph.order()) + "\n";
        for (auto & [u, v] : graph.edges())
            result += "e " + to_string(u) + " " + to_string(v) + "\n";
        return result;
    }

    auto read_edge_list_file(const string & filename) -> Graph
    {
        std::ifstream in(filename, std::ios::binary);
        if (! in)
            throw ParseError(0, "cannot open '" + filename + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_edge_list(buffer.str());
    }
}
