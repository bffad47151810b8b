#ifndef KDOM_SOLVER_HH
#define KDOM_SOLVER_HH

#include <kdom/graph.hh>
#include <kdom/multiset.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace kdom
{
    enum class SolveMethod
    {
        brute,
        bnb
    };

    auto method_name(SolveMethod m) -> std::string_view;

    struct SolveResult
    {
        Count gamma = 0;
        Multiset witness;
        SolveMethod method = SolveMethod::bnb;
        std::uint64_t nodes_explored = 0;
        std::chrono::microseconds elapsed{0};

        /// False only when a time budget ran out; gamma and witness then describe the incumbent.
        bool optimal = true;
    };

    /// Thrown by gamma_brute when (k+1)^n exceeds the configured cap.
    class InstanceTooLarge : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto is_k_dominating(const Graph & graph, Count k, const Multiset & d) -> bool;

    struct BruteOptions
    {
        std::uint64_t configuration_cap = 100'000'000;
    };

    /// Exhaustive search over {0..k}^V in lexicographic order (vertex 0 most significant).
    /// Returns the first minimum-cardinality feasible vector.
    auto gamma_brute(const Graph & graph, Count k, const BruteOptions & options = {}) -> SolveResult;

    struct BnbOptions
    {
        std::optional<std::chrono::milliseconds> time_budget;
    };

    /// Depth-first branch and bound. Vertices are fixed in descending degree order
    /// (ties by id), multiplicities tried from high to low.
    auto gamma_bnb(const Graph & graph, Count k, const BnbOptions & options = {}) -> SolveResult;

    auto solve(const Graph & graph, Count k, SolveMethod method, const BnbOptions & options = {}) -> SolveResult;

    /// Greedy feasible multiset: one copy at a time on the vertex whose closed
    /// neighbourhood holds the most vertices still short of k, lowest id on ties.
    auto greedy_upper(const Graph & graph, Count k) -> Multiset;

    /// ceil(k * n / (max_degree + 1)).
    auto lower_bound(const Graph & graph, Count k) -> Count;
}

#endif
