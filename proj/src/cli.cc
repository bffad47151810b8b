#include <kdom/cli.hh>
#include <kdom/certificate.hh>
#include <kdom/graph.hh>
#include <kdom/product.hh>
#include <kdom/solver.hh>
#include <kdom/sweep.hh>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <thread>

using std::ostream;
using std::string;
using std::vector;

namespace kdom
{
    using std::to_string;

    namespace
    {
        auto budget_from_seconds(double seconds) -> std::optional<std::chrono::milliseconds>
        {
            if (seconds <= 0)
                return std::nullopt;
            return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
        }

        auto print_report(const VerificationReport & report, ostream & out) -> void
        {
            for (auto & check : report.checks) {
                out << "check " << check.number << " " << (check.passed ? "PASS" : "FAIL") << " " << check.name << "\n";
                for (auto & detail : check.details)
                    out << "    " << detail << "\n";
            }
        }

        auto print_chain(const Chain & chain, ostream & out) -> void
        {
            out << "chain: " << chain.lhs << " <= " << chain.sum_n << " <= " << chain.sum_s << " = " << chain.rhs << "\n";
        }

        auto read_text(const string & filename) -> string
        {
            std::ifstream in(filename, std::ios::binary);
            if (! in)
                throw ParseError(0, "cannot open '" + filename + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        struct SolveFlags
        {
            string graph;
            Count k = 1;
            string method = "bnb";
            bool witness = false;
            double budget_seconds = 60;
        };

        auto cmd_solve(const SolveFlags & flags, ostream & out, ostream & err) -> int
        {
            Graph graph;
            try {
                graph = read_edge_list_file(flags.graph);
            }
            catch (const ParseError & e) {
                err << flags.graph << ": " << e.what() << "\n";
                return exit_code::parse_error;
            }

            SolveResult result;
            try {
                if (flags.method == "brute")
                    result = gamma_brute(graph, flags.k);
                else
                    result = gamma_bnb(graph, flags.k, {.time_budget = budget_from_seconds(flags.budget_seconds)});
            }
            catch (const InstanceTooLarge & e) {
                err << e.what() << "; use --method bnb\n";
                return exit_code::budget_exceeded;
            }

            out << "gamma=" << result.gamma << "\n";
            if (flags.witness)
                out << "witness=" << to_string(result.witness) << "\n";
            out << "method=" << method_name(result.method) << " nodes=" << result.nodes_explored
                << " elapsed_ms=" << result.elapsed.count() / 1000 << "\n";
            if (! result.optimal) {
                err << "time budget exhausted; gamma is an upper bound\n";
                return exit_code::budget_exceeded;
            }
            return exit_code::ok;
        }

        struct VerifyFlags
        {
            string g, h;
            Count k = 1;
            string cert;
            bool include_z = false;
            double budget_seconds = 60;
        };

        auto cmd_verify(const VerifyFlags & flags, ostream & out, ostream & err) -> int
        {
            Graph g, h;
            try {
                g = read_edge_list_file(flags.g);
                h = read_edge_list_file(flags.h);
            }
            catch (const ParseError & e) {
                err << e.what() << "\n";
                return exit_code::parse_error;
            }

            auto result = evaluate_instance(g, h, flags.k, {.time_budget = budget_from_seconds(flags.budget_seconds)}, {.include_z = flags.include_z});
            out << "gamma_g=" << result.solve_g.gamma << " gamma_h=" << result.solve_h.gamma
                << " gamma_gh=" << result.solve_gh.gamma << "\n";
            if (! result.optimal()) {
                err << "time budget exhausted before all three solves finished\n";
                return exit_code::budget_exceeded;
            }

            print_chain(result.certificate->chain, out);
            print_report(*result.report, out);

            if (! flags.cert.empty()) {
                std::ofstream file(flags.cert, std::ios::binary);
                file << serialize_certificate(*result.certificate);
                if (! file) {
                    err << "cannot write '" << flags.cert << "'\n";
                    return exit_code::parse_error;
                }
            }
            return result.verified() ? exit_code::ok : exit_code::verification_failed;
        }

        auto cmd_check_cert(const string & filename, ostream & out, ostream & err) -> int
        {
            Certificate cert;
            try {
                cert = parse_certificate(read_text(filename));
            }
            catch (const ParseError & e) {
                err << e.what() << "\n";
                return exit_code::parse_error;
            }
            catch (const SchemaError & e) {
                err << "schema error at " << e.what() << "\n";
                return exit_code::parse_error;
            }

            auto report = verify_certificate(cert);
            print_report(report, out);
            print_chain(cert.chain, out);
            return report.all_passed() ? exit_code::ok : exit_code::verification_failed;
        }

        struct SweepFlags
        {
            string families;
            std::size_t n_max = 4;
            Count k_max = 1;
            std::uint64_t seed = 0;
            std::size_t random_count = 0;
            std::size_t random_n_max = 0;
            string out;
            double budget_seconds = 60;
            double total_budget_seconds = 0;
            bool no_timing = false;
            unsigned jobs = 0;
        };

        auto split_list(const string & text) -> vector<string>
        {
            vector<string> result;
            std::stringstream stream(text);
            string item;
            while (std::getline(stream, item, ','))
                if (! item.empty())
                    result.push_back(item);
            return result;
        }

        auto cmd_sweep(const SweepFlags & flags, ostream & out, ostream & err) -> int
        {
            SweepOptions options;
            options.families = split_list(flags.families);
            options.n_max = flags.n_max;
            options.k_max = flags.k_max;
            options.seed = flags.seed;
            options.random_count = flags.random_count;
            if (flags.random_n_max != 0)
                options.random_n_max = flags.random_n_max;
            options.instance_budget = budget_from_seconds(flags.budget_seconds);
            options.total_budget = budget_from_seconds(flags.total_budget_seconds);
            options.timing = ! flags.no_timing;
            options.jobs = flags.jobs != 0 ? flags.jobs : std::max(1u, std::thread::hardware_concurrency());

            try {
                sweep_graphs(options);
            }
            catch (const GraphError & e) {
                err << e.what() << "\n";
                return exit_code::parse_error;
            }

            std::ofstream file(flags.out, std::ios::binary);
            if (! file) {
                err << "cannot write '" << flags.out << "'\n";
                return exit_code::parse_error;
            }

            auto outcome = run_sweep(options, file);
            std::size_t certified = 0;
            for (auto & row : outcome.rows)
                certified += row.cert_ok;
            out << outcome.rows.size() << " rows, " << certified << " certified\n";

            if (outcome.ratio_violation) {
                err << "ratio above 1 on an optimally solved instance\n";
                return exit_code::ratio_violation;
            }
            if (outcome.budget_exceeded) {
                err << "budget exceeded; CSV is partial\n";
                return exit_code::budget_exceeded;
            }
            if (certified != outcome.rows.size()) {
                err << "some certificates failed verification\n";
                return exit_code::verification_failed;
            }
            return exit_code::ok;
        }
    }

    auto run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"k-domination of graphs and Cartesian products"};
        app.require_subcommand(1);

        SolveFlags solve_flags;
        auto solve = app.add_subcommand("solve", "compute gamma_{k}(G) exactly");
        solve->add_option("--graph", solve_flags.graph, "edge-list file")->required();
        solve->add_option("--k", solve_flags.k, "domination multiplicity")->required()->check(CLI::PositiveNumber);
        solve->add_option("--method", solve_flags.method, "brute or bnb")->check(CLI::IsMember({"brute", "bnb"}));
        solve->add_flag("--witness", solve_flags.witness, "print an optimal multiset");
        solve->add_option("--budget-seconds", solve_flags.budget_seconds, "time budget for bnb, 0 for none");

        VerifyFlags verify_flags;
        auto verify = app.add_subcommand("verify", "solve G, H, G□H and check the product bound by certificate");
        verify->set_help_flag("--help", "print this help message and exit");
        verify->add_option("--g", verify_flags.g, "edge-list file for G")->required();
        verify->add_option("--h", verify_flags.h, "edge-list file for H")->required();
        verify->add_option("--k", verify_flags.k, "domination multiplicity")->required()->check(CLI::PositiveNumber);
        verify->add_option("--cert", verify_flags.cert, "write the certificate JSON here");
        verify->add_flag("--include-z", verify_flags.include_z, "store the Z block unions in the certificate");
        verify->add_option("--budget-seconds", verify_flags.budget_seconds, "time budget per solve, 0 for none");

        string cert_file;
        auto check = app.add_subcommand("check-cert", "verify a certificate file without solving");
        check->add_option("cert", cert_file, "certificate JSON")->required();

        SweepFlags sweep_flags;
        auto sweep = app.add_subcommand("sweep", "check the product bound over graph families and write CSV");
        sweep->add_option("--families", sweep_flags.families, "comma-separated: path,cycle,complete,star,grid")->required();
        sweep->add_option("--n-max", sweep_flags.n_max, "largest family order")->required();
        sweep->add_option("--k-max", sweep_flags.k_max, "largest k")->required();
        sweep->add_option("--seed", sweep_flags.seed, "seed for random graphs");
        sweep->add_option("--random-count", sweep_flags.random_count, "number of random graphs");
        sweep->add_option("--random-n-max", sweep_flags.random_n_max, "largest random-graph order, defaults to --n-max");
        sweep->add_option("--out", sweep_flags.out, "CSV output file")->required();
        sweep->add_option("--budget-seconds", sweep_flags.budget_seconds, "time budget per solve, 0 for none");
        sweep->add_option("--total-budget-seconds", sweep_flags.total_budget_seconds, "cumulative budget, 0 for none");
        sweep->add_flag("--no-timing", sweep_flags.no_timing, "write 0 in the millis column");
        sweep->add_option("--jobs", sweep_flags.jobs, "worker threads, 0 for all cores");

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << e.what() << "\n";
            return exit_code::parse_error;
        }

        if (*solve)
            return cmd_solve(solve_flags, out, err);
        if (*verify)
            return cmd_verify(verify_flags, out, err);
        if (*check)
            return cmd_check_cert(cert_file, out, err);
        return cmd_sweep(sweep_flags, out, err);
    }
}
