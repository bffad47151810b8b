#include <kdom/certificate.hh>
#include <kdom/partition.hh>
#include <kdom/solver.hh>
#include <kdom/sweep.hh>

#include "../support/oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kdom;

namespace
{
    auto build(const Graph & g, const Graph & h, Count k, const BuildOptions & options = {}) -> Certificate
    {
        return build_certificate(g, h, k, gamma_bnb(g, k), gamma_bnb(h, k), gamma_bnb(cartesian_product(g, h).graph(), k), options);
    }

    auto contains(const std::vector<int> & xs, int x) -> bool
    {
        return std::find(xs.begin(), xs.end(), x) != xs.end();
    }

    auto details_of(const VerificationReport & report, int number) -> std::string
    {
        std::string result;
        for (auto & c : report.checks)
            if (c.number == number)
                for (auto & d : c.details)
                    result += d + "\n";
        return result;
    }
}

TEST_CASE("dominator assignment")
{
    ProductGraph single{make_complete(1), make_complete(1)};
    auto asgn = assign_dominators(single, 2, Multiset{0, 0});
    CHECK(asgn.dominators == std::vector<std::vector<Id>>{{0, 0}});
    CHECK_THROWS_AS(assign_dominators(single, 2, Multiset{0}), CertificateError);

    ProductGraph square{make_complete(2), make_complete(2)};
    auto sq = assign_dominators(square, 1, Multiset{0, 3});
    for (auto & list : sq.dominators)
        CHECK(list.size() == 1);
    CHECK(sq.dominators[1] == std::vector<Id>{0});
    CHECK(sq.dominators[3] == std::vector<Id>{3});
}

TEST_CASE("dominator of copy")
{
    DominatorAssignment one{{{7}}};
    for (size_t s = 0 ; s < 1 ; ++s)
        CHECK(dominator_of_copy(one, 0, s, 0) == 7);

    DominatorAssignment two{{{10, 11}}};
    CHECK(dominator_of_copy(two, 0, 0, 0) == 10);
    CHECK(dominator_of_copy(two, 0, 0, 1) == 11);
    CHECK(dominator_of_copy(two, 0, 1, 0) == 11);
    CHECK(dominator_of_copy(two, 0, 1, 1) == 10);

    DominatorAssignment four{{{1, 2, 3, 4}}};
    for (size_t s = 0 ; s < 4 ; ++s) {
        std::vector<Id> seen;
        for (size_t r = 0 ; r < 4 ; ++r)
            seen.push_back(dominator_of_copy(four, 0, s, r));
        std::sort(seen.begin(), seen.end());
        CHECK(seen == std::vector<Id>{1, 2, 3, 4});
    }
}

TEST_CASE("classification")
{
    CHECK(classify_matrix({{1}}) == Classification{true, false});
    CHECK(classify_matrix({{0}}) == Classification{false, true});
    CHECK(classify_matrix({{0, 1}, {1, 0}}) == Classification{true, true});
    CHECK(classify_matrix({{1, 1}, {0, 0}}) == Classification{true, false});
    CHECK_THROWS_AS(classify_matrix({}), CertificateError);

    std::vector<std::string> failures;
    CHECK(oracles::check_matrix_classification(19, 10000, failures) == 10000);
    for (auto & f : failures)
        FAIL_CHECK(f);
}

TEST_CASE("F matrix of K2 x K1")
{
    ProductGraph pg{make_complete(2), make_complete(1)};
    auto pgp = build_k_partition(pg.g(), 1, {0});
    auto php = build_k_partition(pg.h(), 1, {0});
    auto asgn = assign_dominators(pg, 1, Multiset{pg.index(0, 0)});
    auto f = build_f_matrix(pg, pgp, php, asgn, 0, 0);
    CHECK(f.entries == BinaryMatrix{{1}, {0}});
    CHECK(f.classification == Classification{true, false});
}

TEST_CASE("self-dominated copies give 1")
{
    ProductGraph pg{make_complete(1), make_complete(1)};
    auto p = build_k_partition(pg.g(), 3, {0, 0, 0});
    auto asgn = assign_dominators(pg, 3, Multiset{0, 0, 0});
    for (size_t i = 0 ; i < 3 ; ++i)
        for (size_t j = 0 ; j < 3 ; ++j)
            CHECK(build_f_matrix(pg, p, p, asgn, i, j).entries == BinaryMatrix{{1}});
}

TEST_CASE("single-vertex certificates")
{
    for (Count k = 1 ; k <= 4 ; ++k) {
        auto cert = build(make_complete(1), make_complete(1), k);
        CHECK(cert.chain.lhs == k * k);
        CHECK(cert.chain.rhs == 2 * k * k);
        CHECK(verify_certificate(cert).all_passed());
    }
}

TEST_CASE("square certificate")
{
    auto cert = build(make_complete(2), make_complete(2), 1);
    CHECK(cert.gamma_g == 1);
    CHECK(cert.gamma_h == 1);
    CHECK(cert.gamma_gh == 2);
    CHECK(cert.chain.lhs == 1);
    CHECK(cert.chain.rhs == 4);
    CHECK(cert.chain.lhs <= cert.chain.sum_n);
    CHECK(cert.chain.sum_n <= cert.chain.sum_s);
    CHECK(cert.chain.sum_s == cert.chain.rhs);
    auto report = verify_certificate(cert);
    CHECK(report.checks.size() == 9);
    CHECK(report.all_passed());
}

TEST_CASE("built certificates verify")
{
    std::mt19937_64 rng(31);
    for (int t = 0 ; t < 60 ; ++t) {
        auto g = oracles::random_graph(rng, 1 + rng() % 4), h = oracles::random_graph(rng, 1 + rng() % 4);
        Count k = 1 + rng() % 2;
        auto cert = build(g, h, k, {.include_z = t % 2 == 0});
        auto report = verify_certificate(cert);
        CAPTURE(serialize_certificate(cert));
        CHECK(report.all_passed());
        CHECK(cert.chain.lhs <= cert.chain.rhs);
    }
}

TEST_CASE("builder needs optimal solves")
{
    auto g = make_path(3);
    auto solved = gamma_bnb(g, 1);
    auto stale = solved;
    stale.optimal = false;
    CHECK_THROWS(build_certificate(g, g, 1, stale, solved, gamma_bnb(cartesian_product(g, g).graph(), 1)));
}

TEST_CASE("mutations are caught")
{
    auto base = build(make_path(3), make_cycle(4), 2);
    REQUIRE(verify_certificate(base).all_passed());

    SUBCASE("flipped bit names block and cell")
    {
        auto cert = base;
        REQUIRE(oracles::mutate(cert, oracles::Mutation::flip_matrix_bit, 0));
        auto report = verify_certificate(cert);
        CHECK_FALSE(report.passed(4));
        auto text = details_of(report, 4);
        CHECK(text.find("F_") != std::string::npos);
        CHECK(text.find("cell") != std::string::npos);
    }

    SUBCASE("strip copy deleted")
    {
        auto cert = base;
        REQUIRE(oracles::mutate(cert, oracles::Mutation::delete_strip_copy, 1));
        auto failed = verify_certificate(cert).failed_checks();
        CHECK((contains(failed, 6) || contains(failed, 8)));
    }

    SUBCASE("chain claims a violated inequality")
    {
        auto cert = base;
        cert.chain.rhs = cert.chain.lhs - 1;
        CHECK_FALSE(verify_certificate(cert).passed(9));
    }

    SUBCASE("every mutation kind, several variants")
    {
        using oracles::Mutation;
        for (auto m : {Mutation::flip_matrix_bit, Mutation::drop_classification, Mutation::delete_strip_copy,
                Mutation::decrement_chain, Mutation::corrupt_partition_block})
            for (size_t variant = 0 ; variant < 8 ; ++variant) {
                auto cert = base;
                REQUIRE(oracles::mutate(cert, m, variant));
                auto failed = verify_certificate(cert).failed_checks();
                CAPTURE(oracles::mutation_name(m));
                CAPTURE(variant);
                CHECK_FALSE(failed.empty());
                auto expected = oracles::expected_failures(m);
                CHECK(std::any_of(expected.begin(), expected.end(), [&] (int n) { return contains(failed, n); }));
            }
    }

    SUBCASE("structural damage is reported, not thrown")
    {
        auto cert = base;
        cert.assignment.dominators.pop_back();
        cert.blocks.pop_back();
        cert.s_sets.clear();
        auto report = verify_certificate(cert);
        CHECK_FALSE(report.all_passed());
        CHECK(report.checks.size() == 9);
    }
}

TEST_CASE("serialization round trip")
{
    std::mt19937_64 rng(37);
    for (int t = 0 ; t < 30 ; ++t) {
        auto g = oracles::random_graph(rng, 1 + rng() % 4), h = oracles::random_graph(rng, 1 + rng() % 3);
        auto cert = build(g, h, 1 + rng() % 2, {.include_z = t % 3 == 0});
        auto text = serialize_certificate(cert);
        auto back = parse_certificate(text);
        CHECK(back == cert);
        CHECK(serialize_certificate(back) == text);
        CHECK(verify_certificate(back).all_passed());
    }
}

TEST_CASE("schema errors")
{
    auto text = serialize_certificate(build(make_path(2), make_path(2), 1));

    SUBCASE("truncated")
    {
        CHECK_THROWS_AS(parse_certificate(text.substr(0, text.size() / 2)), SchemaError);
    }

    SUBCASE("renamed field")
    {
        auto renamed = text;
        auto pos = renamed.find("\"partition_g\"");
        REQUIRE(pos != std::string::npos);
        renamed.replace(pos, 13, "\"partitionG\"");
        try {
            parse_certificate(renamed);
            FAIL("renamed field accepted");
        }
        catch (const SchemaError & e) {
            CHECK(e.path() == "$.partition_g");
        }
    }

    SUBCASE("wrong version")
    {
        auto bumped = text;
        bumped.replace(bumped.find("\"version\":1"), 11, "\"version\":2");
        CHECK_THROWS_AS(parse_certificate(bumped), SchemaError);
    }

    SUBCASE("zero k")
    {
        auto zero = text;
        zero.replace(zero.find("\"k\":1"), 5, "\"k\":0");
        CHECK_THROWS_AS(parse_certificate(zero), SchemaError);
    }

    SUBCASE("not an object")
    {
        CHECK_THROWS_AS(parse_certificate("[]"), SchemaError);
        CHECK_THROWS_AS(parse_certificate(""), SchemaError);
    }
}
