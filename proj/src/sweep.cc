#include <kdom/sweep.hh>

#include <atomic>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

using std::size_t;
using std::string;
using std::vector;

using Clock = std::chrono::steady_clock;

namespace kdom
{
    using std::to_string;

    auto evaluate_instance(const Graph & g, const Graph & h, Count k, const BnbOptions & options, const BuildOptions & build) -> InstanceResult
    {
        InstanceResult result;
        result.solve_g = gamma_bnb(g, k, options);
        result.solve_h = gamma_bnb(h, k, options);
        result.solve_gh = gamma_bnb(cartesian_product(g, h).graph(), k, options);
        if (result.optimal()) {
            result.certificate = build_certificate(g, h, k, result.solve_g, result.solve_h, result.solve_gh, build);
            result.report = verify_certificate(*result.certificate);
        }
        return result;
    }

    auto format_ratio(Count numerator, Count denominator) -> string
    {
        if (denominator == 0)
            return "undefined";
        auto divisor = std::gcd(numerator, denominator);
        char decimal[64];
        std::snprintf(decimal, sizeof(decimal), "%.6f", static_cast<double>(numerator) / static_cast<double>(denominator));
        return to_string(numerator / divisor) + "/" + to_string(denominator / divisor) + " " + decimal;
    }

    auto sweep_graphs(const SweepOptions & options) -> vector<NamedGraph>
    {
        if (options.families.empty())
            throw GraphError("no graph families given");
        if (options.n_max < 1)
            throw GraphError("n-max must be at least 1");

        vector<NamedGraph> result;
        for (auto & name : options.families) {
            auto family = parse_family(name);
            switch (family) {
                case Family::path:
                case Family::complete:
                case Family::star:
                    for (size_t n = 1 ; n <= options.n_max ; ++n)
                        result.push_back({name, "n=" + to_string(n), generate(family, {.n = n})});
                    break;
                case Family::cycle:
                    for (size_t n = 3 ; n <= options.n_max ; ++n)
                        result.push_back({name, "n=" + to_string(n), make_cycle(n)});
                    break;
                case Family::grid:
                    for (size_t rows = 2 ; rows * rows <= options.n_max ; ++rows)
                        for (size_t cols = rows ; rows * cols <= options.n_max ; ++cols)
                            result.push_back({name, "rows=" + to_string(rows) + " cols=" + to_string(cols), make_grid(rows, cols)});
                    break;
                case Family::random_gnp:
                    throw GraphError("random graphs are requested with --random-count, not as a family");
            }
        }

        if (options.random_count > 0 && options.random_p.empty())
            throw GraphError("random graphs need at least one edge probability");

        auto random_n_max = options.random_n_max.value_or(options.n_max);
        if (options.random_count > 0 && random_n_max < 1)
            throw GraphError("random graphs need a maximum order of at least 1");

        // One master generator hands out (order, graph seed) pairs; probabilities cycle.
        std::mt19937_64 master(options.seed);
        for (size_t r = 0 ; r < options.random_count ; ++r) {
            auto n = 1 + static_cast<size_t>(master() % random_n_max);
            auto graph_seed = master();
            auto p = options.random_p[r % options.random_p.size()];
            char params[96];
            std::snprintf(params, sizeof(params), "n=%zu p=%.2f seed=%llu", n, p, static_cast<unsigned long long>(graph_seed));
            result.push_back({"random", params, make_random_gnp(n, p, graph_seed)});
        }
        return result;
    }

    auto csv_header() -> string
    {
        return "family_g,params_g,family_h,params_h,k,gamma_g,gamma_h,gamma_product,lhs,rhs,ratio,cert_ok,millis";
    }

    auto csv_row(const SweepRow & row, bool timing) -> string
    {
        return row.family_g + "," + row.params_g + "," + row.family_h + "," + row.params_h + "," + to_string(row.k) + ","
            + to_string(row.gamma_g) + "," + to_string(row.gamma_h) + "," + to_string(row.gamma_product) + ","
            + to_string(row.lhs) + "," + to_string(row.rhs) + "," + format_ratio(row.lhs, row.rhs) + ","
            + (row.cert_ok ? "true" : "false") + "," + to_string(timing ? row.millis : 0);
    }

    namespace
    {
        struct Instance
        {
            size_t g, h;
            Count k;
        };
    }

    auto run_sweep(const SweepOptions & options, std::ostream & csv) -> SweepOutcome
    {
        auto graphs = sweep_graphs(options);
        if (options.k_max < 1)
            throw GraphError("k-max must be at least 1");

        vector<Instance> instances;
        for (size_t g = 0 ; g < graphs.size() ; ++g)
            for (size_t h = 0 ; h < graphs.size() ; ++h)
                for (Count k = 1 ; k <= options.k_max ; ++k)
                    instances.push_back({g, h, k});

        vector<std::optional<SweepRow>> rows(instances.size());
        std::atomic<size_t> next{0};
        std::atomic<bool> stop{false}, budget_exceeded{false}, ratio_violation{false};
        auto start = Clock::now();

        auto worker = [&] {
            while (! stop) {
                auto index = next++;
                if (index >= instances.size())
                    return;

                if (options.total_budget && Clock::now() - start > *options.total_budget) {
                    budget_exceeded = true;
                    stop = true;
                    return;
                }

                auto & inst = instances[index];
                auto & ng = graphs[inst.g];
                auto & nh = graphs[inst.h];
                auto instance_start = Clock::now();
                auto result = evaluate_instance(ng.graph, nh.graph, inst.k, {.time_budget = options.instance_budget});

                SweepRow row;
                row.family_g = ng.family;
                row.params_g = ng.params;
                row.family_h = nh.family;
                row.params_h = nh.params;
                row.k = inst.k;
                row.gamma_g = result.solve_g.gamma;
                row.gamma_h = result.solve_h.gamma;
                row.gamma_product = result.solve_gh.gamma;
                row.lhs = row.gamma_g * row.gamma_h;
                row.rhs = 2 * inst.k * row.gamma_product;
                row.optimal = result.optimal();
                row.cert_ok = result.verified();
                row.within_weaker_bound = row.lhs <= inst.k * (inst.k + 1) * row.gamma_product;
                row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - instance_start).count();
                rows[index] = row;

                if (! row.optimal) {
                    budget_exceeded = true;
                    stop = true;
                }
                else if (row.lhs > row.rhs) {
                    ratio_violation = true;
                    stop = true;
                }
            }
        };

        auto jobs = std::max(1u, options.jobs);
        if (jobs == 1)
            worker();
        else {
            vector<std::jthread> pool;
            for (unsigned t = 0 ; t < jobs ; ++t)
                pool.emplace_back(worker);
        }

        SweepOutcome outcome;
        outcome.budget_exceeded = budget_exceeded;
        outcome.ratio_violation = ratio_violation;

        csv << csv_header() << '\n';
        for (auto & row : rows) {
            if (! row)
                break;
            csv << csv_row(*row, options.timing) << '\n';
            outcome.rows.push_back(*row);
        }
        if (outcome.rows.size() < instances.size())
            csv << "# incomplete: " << outcome.rows.size() << " of " << instances.size() << " instances\n";
        csv.flush();
        return outcome;
    }
}
