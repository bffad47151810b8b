#include <kdom/cli.hh>
#include <kdom/certificate.hh>
#include <kdom/graph.hh>
#include <kdom/sweep.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace kdom;

namespace
{
    namespace fs = std::filesystem;

    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(const std::vector<std::string> & args) -> Run
    {
        std::ostringstream out, err;
        auto code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    class Scratch
    {
        private:
            fs::path _dir;

        public:
            Scratch()
            {
                _dir = fs::temp_directory_path() / ("kdom_cli_test_" + std::to_string(::getpid()));
                fs::create_directories(_dir);
            }

            ~Scratch()
            {
                std::error_code ec;
                fs::remove_all(_dir, ec);
            }

            auto write(const std::string & name, const std::string & text) const -> std::string
            {
                auto path = (_dir / name).string();
                std::ofstream(path, std::ios::binary) << text;
                return path;
            }

            auto path(const std::string & name) const -> std::string
            {
                return (_dir / name).string();
            }
    };

    auto read(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto contains(const std::string & text, const std::string & part) -> bool
    {
        return text.find(part) != std::string::npos;
    }
}

TEST_CASE("cli solve")
{
    Scratch scratch;
    auto path4 = scratch.write("path4.txt", serialize_edge_list(make_path(4)));
    auto k3 = scratch.write("k3.txt", serialize_edge_list(make_complete(3)));

    auto r = run({"solve", "--graph", path4, "--k", "2"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.starts_with("gamma=4\n"));

    r = run({"solve", "--graph", k3, "--k", "2", "--method", "brute", "--witness"});
    CHECK(r.code == exit_code::ok);
    CHECK(contains(r.out, "gamma=2\n"));
    CHECK(contains(r.out, "witness={"));
    CHECK(contains(r.out, "method=brute"));

    auto bad = scratch.write("bad.txt", "n 3\ne 0 1\ne 1 1\n");
    r = run({"solve", "--graph", bad, "--k", "1"});
    CHECK(r.code == exit_code::parse_error);
    CHECK(contains(r.err, "line 3"));

    CHECK(run({"solve", "--graph", scratch.path("missing.txt"), "--k", "1"}).code == exit_code::parse_error);
    CHECK(run({"solve", "--graph", path4, "--k", "0"}).code == exit_code::parse_error);
    CHECK(run({"solve", "--graph", path4, "--k", "1", "--method", "magic"}).code == exit_code::parse_error);
    CHECK(run({"solve", "--k", "1"}).code == exit_code::parse_error);
    CHECK(run({}).code == exit_code::parse_error);

    auto big = scratch.write("big.txt", serialize_edge_list(make_path(40)));
    CHECK(run({"solve", "--graph", big, "--k", "1", "--method", "brute"}).code == exit_code::budget_exceeded);
}

TEST_CASE("cli verify and check-cert")
{
    Scratch scratch;
    auto k2 = scratch.write("k2.txt", serialize_edge_list(make_complete(2)));
    auto k1 = scratch.write("k1.txt", serialize_edge_list(make_complete(1)));
    auto cert = scratch.path("cert.json");

    auto r = run({"verify", "--g", k2, "--h", k2, "--k", "1", "--cert", cert});
    CHECK(r.code == exit_code::ok);
    CHECK(contains(r.out, "chain: 1 <= "));
    CHECK(contains(r.out, " = 4\n"));

    r = run({"verify", "--g", k1, "--h", k1, "--k", "3"});
    CHECK(r.code == exit_code::ok);
    CHECK(contains(r.out, "chain: 9 <= "));
    CHECK(contains(r.out, " = 18\n"));

    CHECK(run({"verify", "--g", scratch.path("nope.txt"), "--h", k2, "--k", "1"}).code == exit_code::parse_error);

    r = run({"check-cert", cert});
    CHECK(r.code == exit_code::ok);
    size_t passes = 0;
    for (size_t pos = 0 ; (pos = r.out.find(" PASS ", pos)) != std::string::npos ; ++pos)
        ++passes;
    CHECK(passes == 9);

    auto parsed = parse_certificate(read(cert));
    auto flipped = parsed;
    flipped.blocks[0].entries[0][0] ^= 1;
    r = run({"check-cert", scratch.write("flipped.json", serialize_certificate(flipped))});
    CHECK(r.code == exit_code::verification_failed);
    CHECK(contains(r.out, "check 4 FAIL"));

    auto tampered = parsed;
    tampered.chain.rhs = tampered.chain.lhs - 1;
    r = run({"check-cert", scratch.write("tampered.json", serialize_certificate(tampered))});
    CHECK(r.code == exit_code::verification_failed);
    CHECK(contains(r.out, "check 9 FAIL"));

    auto text = read(cert);
    CHECK(run({"check-cert", scratch.write("truncated.json", text.substr(0, text.size() / 3))}).code == exit_code::parse_error);
    CHECK(run({"check-cert", scratch.path("absent.json")}).code == exit_code::parse_error);
}

TEST_CASE("cli sweep")
{
    Scratch scratch;
    auto csv = scratch.path("sweep.csv");
    auto r = run({"sweep", "--families", "path,cycle,complete", "--n-max", "4", "--k-max", "2", "--out", csv, "--no-timing"});
    CHECK(r.code == exit_code::ok);
    auto text = read(csv);
    CHECK(text.starts_with("family_g,params_g,family_h,params_h,k,gamma_g,gamma_h,gamma_product,lhs,rhs,ratio,cert_ok,millis\n"));
    CHECK_FALSE(contains(text, ",false,"));
    CHECK_FALSE(contains(text, "# incomplete"));
    // 4 paths, 2 cycles, 4 completes: 10 graphs, 100 ordered pairs, 2 values of k.
    CHECK(r.out == "200 rows, 200 certified\n");

    CHECK(run({"sweep", "--families", "", "--n-max", "4", "--k-max", "1", "--out", csv}).code == exit_code::parse_error);
    CHECK(run({"sweep", "--families", "hypercube", "--n-max", "4", "--k-max", "1", "--out", csv}).code == exit_code::parse_error);
    CHECK(run({"sweep", "--families", "path", "--n-max", "4", "--k-max", "1", "--out", scratch.path("no/such/dir.csv")}).code == exit_code::parse_error);

    r = run({"sweep", "--families", "grid", "--n-max", "16", "--k-max", "3", "--out", csv, "--budget-seconds", "0.001", "--jobs", "1"});
    CHECK(r.code == exit_code::budget_exceeded);
    CHECK(contains(read(csv), "# incomplete: "));
}

TEST_CASE("cli help")
{
    CHECK(run({"--help"}).code == exit_code::ok);
    CHECK(run({"verify", "--help"}).code == exit_code::ok);
}

TEST_CASE("ratio formatting")
{
    CHECK(format_ratio(1, 4) == "1/4 0.250000");
    CHECK(format_ratio(6, 12) == "1/2 0.500000");
    CHECK(format_ratio(2, 3) == "2/3 0.666667");
    CHECK(format_ratio(0, 5) == "0/1 0.000000");
    CHECK(format_ratio(3, 0) == "undefined");
}

TEST_CASE("sweep graph enumeration")
{
    SweepOptions options;
    options.families = {"path", "cycle", "complete", "star", "grid"};
    options.n_max = 6;
    auto graphs = sweep_graphs(options);
    // 6 paths, 4 cycles, 6 completes, 6 stars, grids 2x2 and 2x3.
    CHECK(graphs.size() == 24);
    CHECK(graphs.back().params == "rows=2 cols=3");

    options.families = {"path"};
    options.n_max = 2;
    options.random_count = 5;
    options.random_n_max = 3;
    options.seed = 4;
    auto with_random = sweep_graphs(options);
    REQUIRE(with_random.size() == 7);
    for (size_t r = 2 ; r < 7 ; ++r) {
        CHECK(with_random[r].family == "random");
        CHECK(with_random[r].graph.order() <= 3);
        CHECK(with_random[r].params.find(r % 2 == 0 ? "p=0.30" : "p=0.60") != std::string::npos);
    }
    auto again = sweep_graphs(options);
    for (size_t r = 0 ; r < 7 ; ++r)
        CHECK(again[r].graph == with_random[r].graph);

    options.families = {};
    CHECK_THROWS_AS(sweep_graphs(options), GraphError);
    options.families = {"random"};
    CHECK_THROWS_AS(sweep_graphs(options), GraphError);
}

TEST_CASE("sweep rows")
{
    SweepRow row{"path", "n=2", "cycle", "n=3", 2, 2, 2, 4, 4, 16, true, true, true, 37};
    CHECK(csv_row(row, true) == "path,n=2,cycle,n=3,2,2,2,4,4,16,1/4 0.250000,true,37");
    CHECK(csv_row(row, false) == "path,n=2,cycle,n=3,2,2,2,4,4,16,1/4 0.250000,true,0");

    SweepOptions options;
    options.families = {"path", "complete"};
    options.n_max = 3;
    options.k_max = 2;
    options.timing = false;
    std::ostringstream serial, parallel;
    auto one = run_sweep(options, serial);
    options.jobs = 4;
    auto four = run_sweep(options, parallel);
    CHECK(one.rows.size() == 72);
    CHECK(serial.str() == parallel.str());
    CHECK(four.rows.size() == 72);
    for (auto & r : one.rows) {
        CHECK(r.cert_ok);
        CHECK(r.within_weaker_bound);
        CHECK(r.lhs <= r.rhs);
    }
    // G-major, then H, then k.
    CHECK(one.rows[0].params_g == "n=1");
    CHECK(one.rows[0].params_h == "n=1");
    CHECK(one.rows[0].k == 1);
    CHECK(one.rows[1].k == 2);
    CHECK(one.rows[2].params_h == "n=2");
}
