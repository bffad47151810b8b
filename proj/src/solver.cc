#include <kdom/solver.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

using std::size_t;
using std::vector;

using Clock = std::chrono::steady_clock;

namespace kdom
{
    using std::to_string;

    namespace
    {
        auto require_positive_k(Count k) -> void
        {
            if (k == 0)
                throw std::invalid_argument("k must be at least 1");
        }

        auto closed_neighbourhoods(const Graph & graph) -> vector<vector<Id>>
        {
            vector<vector<Id>> result(graph.order());
            for (Id v = 0 ; v < graph.order() ; ++v)
                result[v] = graph.closed_neighbourhood(v);
            return result;
        }

        auto elapsed_since(Clock::time_point start) -> std::chrono::microseconds
        {
            return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
        }

        auto multiset_from_vector(const vector<Count> & x) -> Multiset
        {
            Multiset result;
            for (Id v = 0 ; v < x.size() ; ++v)
                result.add(v, x[v]);
            return result;
        }
    }

    auto method_name(SolveMethod m) -> std::string_view
    {
        return m == SolveMethod::brute ? "brute" : "bnb";
    }

    auto is_k_dominating(const Graph & graph, Count k, const Multiset & d) -> bool
    {
        require_positive_k(k);
        if (! d.empty() && d.max_element() >= graph.order())
            return false;
        for (Id v = 0 ; v < graph.order() ; ++v)
            if (d.count_over(graph.closed_neighbourhood(v)) < k)
                return false;
        return true;
    }

    auto gamma_brute(const Graph & graph, Count k, const BruteOptions & options) -> SolveResult
    {
        require_positive_k(k);
        auto start = Clock::now();
        auto n = graph.order();

        std::uint64_t configurations = 1;
        for (size_t i = 0 ; i < n ; ++i) {
            if (configurations > options.configuration_cap / (k + 1))
                throw InstanceTooLarge("(k+1)^n exceeds the brute-force cap of " + to_string(options.configuration_cap) + " configurations");
            configurations *= (k + 1);
        }

        auto nbhd = closed_neighbourhoods(graph);
        vector<Count> x(n, 0), coverage(n, 0);
        size_t short_of_k = n;
        Count total = 0;

        vector<Count> best;
        Count best_total = 0;
        bool found = false;
        std::uint64_t nodes = 0;

        auto shift = [&] (Id v, long delta) {
            for (auto u : nbhd[v]) {
                bool was_short = coverage[u] < k;
                coverage[u] += delta;
                bool is_short = coverage[u] < k;
                if (was_short && ! is_short)
                    --short_of_k;
                else if (! was_short && is_short)
                    ++short_of_k;
            }
        };

        // Odometer with vertex 0 as the most significant digit, so configurations
        // are visited in lexicographic order.
        while (true) {
            ++nodes;
            if (short_of_k == 0 && (! found || total < best_total)) {
                found = true;
                best = x;
                best_total = total;
            }

            size_t pos = n;
            while (pos > 0 && x[pos - 1] == k) {
                shift(pos - 1, -static_cast<long>(k));
                total -= k;
                x[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                break;
            ++x[pos - 1];
            ++total;
            shift(pos - 1, 1);
        }

        SolveResult result;
        result.method = SolveMethod::brute;
        result.gamma = best_total;
        result.witness = multiset_from_vector(best);
        result.nodes_explored = nodes;
        result.elapsed = elapsed_since(start);
        return result;
    }

    namespace
    {
        class BranchAndBound
        {
            private:
                const Graph & _graph;
                Count _k;
                BnbOptions _options;
                Clock::time_point _start;

                vector<vector<Id>> _nbhd;
                vector<Id> _order;
                vector<Count> _x;
                vector<Count> _coverage;
                vector<size_t> _free;
                vector<char> _assigned;
                Count _total = 0;

                vector<Count> _best;
                Count _best_total = 0;
                std::uint64_t _nodes = 0;
                bool _timed_out = false;

                auto deficit(Id u) const -> Count
                {
                    return _coverage[u] >= _k ? 0 : _k - _coverage[u];
                }

                // Every unit placed on a free vertex w lowers the deficit of at most
                // reach(w) vertices by one, so vertex u needs at least
                // deficit(u) / max reach over its free neighbourhood units charged to it.
                auto residual_bound() const -> Count
                {
                    auto n = _graph.order();
                    vector<size_t> reach(n, 0);
                    for (Id w = 0 ; w < n ; ++w)
                        if (! _assigned[w])
                            for (auto u : _nbhd[w])
                                if (_coverage[u] < _k)
                                    ++reach[w];

                    // Fractions have denominators <= max degree + 1, so a 1e-9 margin
                    // before rounding up cannot cross an integer.
                    double charge = 0.0;
                    Count largest = 0;
                    for (Id u = 0 ; u < n ; ++u) {
                        auto d = deficit(u);
                        if (d == 0)
                            continue;
                        largest = std::max(largest, d);
                        size_t best_reach = 0;
                        for (auto w : _nbhd[u])
                            if (! _assigned[w])
                                best_reach = std::max(best_reach, reach[w]);
                        if (best_reach == 0)
                            return std::numeric_limits<Count>::max() / 2;
                        charge += static_cast<double>(d) / static_cast<double>(best_reach);
                    }
                    auto fractional = static_cast<Count>(std::ceil(charge - 1e-9));
                    return std::max(fractional, largest);
                }

                auto place(Id w, Count value) -> void
                {
                    _x[w] = value;
                    _assigned[w] = 1;
                    _total += value;
                    for (auto u : _nbhd[w]) {
                        _coverage[u] += value;
                        --_free[u];
                    }
                }

                auto unplace(Id w) -> void
                {
                    auto value = _x[w];
                    for (auto u : _nbhd[w]) {
                        _coverage[u] -= value;
                        ++_free[u];
                    }
                    _total -= value;
                    _assigned[w] = 0;
                    _x[w] = 0;
                }

                auto out_of_time() -> bool
                {
                    if (_timed_out)
                        return true;
                    if (_options.time_budget && (_nodes & 1023) == 0 && Clock::now() - _start > *_options.time_budget)
                        _timed_out = true;
                    return _timed_out;
                }

                auto search(size_t depth) -> void
                {
                    ++_nodes;
                    if (out_of_time())
                        return;

                    if (_total + residual_bound() >= _best_total)
                        return;

                    if (depth == _order.size()) {
                        // residual_bound() returned 0, so every vertex is covered.
                        _best = _x;
                        _best_total = _total;
                        return;
                    }

                    auto w = _order[depth];

                    // Each other free vertex in N[u] can contribute at most k, which
                    // forces a minimum on w; more than the largest deficit around w is wasted.
                    Count forced = 0, useful = 0;
                    for (auto u : _nbhd[w]) {
                        auto d = deficit(u);
                        useful = std::max(useful, d);
                        auto others = (_free[u] - 1) * _k;
                        if (d > others)
                            forced = std::max(forced, d - others);
                    }
                    if (forced > _k)
                        return;

                    for (Count value = useful + 1 ; value-- > forced ; ) {
                        if (_total + value >= _best_total)
                            continue;
                        place(w, value);
                        search(depth + 1);
                        unplace(w);
                        if (_timed_out)
                            return;
                    }
                }

            public:
                BranchAndBound(const Graph & graph, Count k, const BnbOptions & options) :
                    _graph(graph),
                    _k(k),
                    _options(options),
                    _start(Clock::now()),
                    _nbhd(closed_neighbourhoods(graph)),
                    _order(graph.order()),
                    _x(graph.order(), 0),
                    _coverage(graph.order(), 0),
                    _free(graph.order()),
                    _assigned(graph.order(), 0)
                {
                    std::iota(_order.begin(), _order.end(), 0);
                    std::stable_sort(_order.begin(), _order.end(), [&] (Id a, Id b) {
                        return graph.degree(a) > graph.degree(b);
                    });
                    for (Id v = 0 ; v < graph.order() ; ++v)
                        _free[v] = _nbhd[v].size();
                }

                auto run() -> SolveResult
                {
                    auto incumbent = greedy_upper(_graph, _k);
                    _best.assign(_graph.order(), 0);
                    for (auto & [v, c] : incumbent)
                        _best[v] = c;
                    _best_total = incumbent.cardinality();

                    if (_best_total > lower_bound(_graph, _k))
                        search(0);

                    SolveResult result;
                    result.method = SolveMethod::bnb;
                    result.gamma = _best_total;
                    result.witness = multiset_from_vector(_best);
                    result.nodes_explored = _nodes;
                    result.elapsed = elapsed_since(_start);
                    result.optimal = ! _timed_out;
                    return result;
                }
        };
    }

    auto gamma_bnb(const Graph & graph, Count k, const BnbOptions & options) -> SolveResult
    {
        require_positive_k(k);
        return BranchAndBound{graph, k, options}.run();
    }

    auto solve(const Graph & graph, Count k, SolveMethod method, const BnbOptions & options) -> SolveResult
    {
        return method == SolveMethod::brute ? gamma_brute(graph, k) : gamma_bnb(graph, k, options);
    }

    auto greedy_upper(const Graph & graph, Count k) -> Multiset
    {
        require_positive_k(k);
        auto n = graph.order();
        auto nbhd = closed_neighbourhoods(graph);
        vector<Count> deficit(n, k);
        size_t short_count = n;
        Multiset result;

        while (short_count > 0) {
            Id chosen = 0;
            size_t chosen_gain = 0;
            for (Id w = 0 ; w < n ; ++w) {
                size_t gain = 0;
                for (auto u : nbhd[w])
                    if (deficit[u] > 0)
                        ++gain;
                if (gain > chosen_gain) {
                    chosen = w;
                    chosen_gain = gain;
                }
            }

            result.add(chosen);
            for (auto u : nbhd[chosen])
                if (deficit[u] > 0 && --deficit[u] == 0)
                    --short_count;
        }
        return result;
    }

    auto lower_bound(const Graph & graph, Count k) -> Count
    {
        require_positive_k(k);
        auto n = graph.order();
        auto denominator = graph.max_degree() + 1;
        return (k * n + denominator - 1) / denominator;
    }
}
