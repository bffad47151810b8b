#include <kdom/product.hh>

#include <algorithm>

using std::string;
using std::vector;

namespace kdom
{
    using std::to_string;

    namespace
    {
        auto build_product_graph(const Graph & g, const Graph & h) -> Graph
        {
            auto nh = h.order();
            Graph result(g.order() * nh);
            for (Id a = 0 ; a < g.order() ; ++a)
                for (auto & [u, v] : h.edges())
                    result.add_edge(a * nh + u, a * nh + v);
            for (auto & [u, v] : g.edges())
                for (Id b = 0 ; b < nh ; ++b)
                    result.add_edge(u * nh + b, v * nh + b);
            return result;
        }
    }

    ProductGraph::ProductGraph(Graph g, Graph h) :
        _g(std::move(g)),
        _h(std::move(h)),
        _graph(build_product_graph(_g, _h))
    {
    }

    auto ProductGraph::index(Id g, Id h) const -> Id
    {
        if (g >= _g.order() || h >= _h.order())
            throw GraphError("product vertex (" + to_string(g) + "," + to_string(h) + ") out of range");
        return g * _h.order() + h;
    }

    auto ProductGraph::g_neighbourhood(Id v) const -> vector<Id>
    {
        vector<Id> result;
        auto [g, h] = std::pair{g_of(v), h_of(v)};
        for (auto other : _g.neighbours(g))
            result.push_back(index(other, h));
        return result;
    }

    auto ProductGraph::h_neighbourhood(Id v) const -> vector<Id>
    {
        vector<Id> result;
        auto [g, h] = std::pair{g_of(v), h_of(v)};
        for (auto other : _h.neighbours(h))
            result.push_back(index(g, other));
        return result;
    }

    auto ProductGraph::g_edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (auto & [u, v] : _graph.edges())
            if (h_of(u) == h_of(v))
                result.emplace_back(u, v);
        return result;
    }

    auto ProductGraph::h_edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (auto & [u, v] : _graph.edges())
            if (g_of(u) == g_of(v))
                result.emplace_back(u, v);
        return result;
    }

    auto ProductGraph::render(Id v) const -> string
    {
        return "(" + to_string(g_of(v)) + "," + to_string(h_of(v)) + ")";
    }

    auto cartesian_product(const Graph & g, const Graph & h) -> ProductGraph
    {
        return ProductGraph{g, h};
    }

    namespace
    {
        template <typename Combine_>
        auto project(const ProductGraph & pg, const Multiset & a, Side side, Combine_ combine) -> Multiset
        {
            auto target_order = side == Side::onto_g ? pg.g().order() : pg.h().order();
            vector<Count> values(target_order, 0);
            for (auto & [v, c] : a) {
                if (v >= pg.graph().order())
                    throw GraphError("product vertex " + to_string(v) + " out of range");
                auto coord = side == Side::onto_g ? pg.g_of(v) : pg.h_of(v);
                values[coord] = combine(values[coord], c);
            }

            Multiset result;
            for (Id x = 0 ; x < target_order ; ++x)
                result.add(x, values[x]);
            return result;
        }
    }

    auto phi_projection(const ProductGraph & pg, const Multiset & a, Side side) -> Multiset
    {
        return project(pg, a, side, [] (Count x, Count y) { return std::max(x, y); });
    }

    auto psi_projection(const ProductGraph & pg, const Multiset & a, Side side) -> Multiset
    {
        return project(pg, a, side, [] (Count x, Count y) { return x + y; });
    }
}
