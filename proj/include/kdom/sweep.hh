#ifndef KDOM_SWEEP_HH
#define KDOM_SWEEP_HH

#include <kdom/certificate.hh>
#include <kdom/graph.hh>
#include <kdom/solver.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kdom
{
    /// Solves G, H and G□H and, when all three are optimal, builds and verifies
    /// the certificate.
    struct InstanceResult
    {
        SolveResult solve_g, solve_h, solve_gh;
        std::optional<Certificate> certificate;
        std::optional<VerificationReport> report;

        [[nodiscard]] auto optimal() const -> bool { return solve_g.optimal && solve_h.optimal && solve_gh.optimal; }
        [[nodiscard]] auto verified() const -> bool { return report && report->all_passed(); }
    };

    auto evaluate_instance(const Graph & g, const Graph & h, Count k, const BnbOptions & options = {},
            const BuildOptions & build = {}) -> InstanceResult;

    /// "p/q d.dddddd" with p/q in lowest terms.
    auto format_ratio(Count numerator, Count denominator) -> std::string;

    struct NamedGraph
    {
        std::string family;
        std::string params;
        Graph graph;
    };

    struct SweepOptions
    {
        std::vector<std::string> families;
        std::size_t n_max = 4;
        Count k_max = 1;
        std::uint64_t seed = 0;
        std::size_t random_count = 0;
        std::optional<std::size_t> random_n_max;    // defaults to n_max
        std::vector<double> random_p{0.3, 0.6};
        std::optional<std::chrono::milliseconds> instance_budget = std::chrono::seconds(60);
        std::optional<std::chrono::milliseconds> total_budget;
        bool timing = true;
        unsigned jobs = 1;
    };

    /// The graphs a sweep enumerates, in order. Throws GraphError on unknown
    /// families or when the list is empty.
    auto sweep_graphs(const SweepOptions & options) -> std::vector<NamedGraph>;

    struct SweepRow
    {
        std::string family_g, params_g, family_h, params_h;
        Count k = 1;
        Count gamma_g = 0, gamma_h = 0, gamma_product = 0;
        Count lhs = 0, rhs = 0;
        bool optimal = true;
        bool cert_ok = false;
        bool within_weaker_bound = false;
        std::int64_t millis = 0;
    };

    struct SweepOutcome
    {
        std::vector<SweepRow> rows;
        bool budget_exceeded = false;
        bool ratio_violation = false;
    };

    auto csv_header() -> std::string;
    auto csv_row(const SweepRow & row, bool timing) -> std::string;

    /// Rows are written to csv in instance order (G-major, then H, then k) as they
    /// complete. On budget exhaustion the finished rows are flushed followed by an
    /// "# incomplete" marker line.
    auto run_sweep(const SweepOptions & options, std::ostream & csv) -> SweepOutcome;
}

#endif
