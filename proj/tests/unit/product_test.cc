#include <kdom/product.hh>

#include "../support/oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kdom;

TEST_CASE("cartesian product shapes")
{
    auto square = cartesian_product(make_complete(2), make_complete(2));
    CHECK(square.graph().order() == 4);
    CHECK(square.graph().size() == 4);
    CHECK(square.graph() == Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));

    auto grid = cartesian_product(make_path(2), make_path(3));
    CHECK(grid.graph() == make_grid(2, 3));
    CHECK(grid.graph().size() == 7);

    auto h = make_star(4);
    CHECK(cartesian_product(make_complete(1), h).graph() == h);
}

TEST_CASE("coordinates")
{
    ProductGraph pg{make_path(3), make_cycle(4)};
    for (Id g = 0 ; g < 3 ; ++g)
        for (Id h = 0 ; h < 4 ; ++h) {
            auto v = pg.index(g, h);
            CHECK(v == g * 4 + h);
            CHECK(pg.g_of(v) == g);
            CHECK(pg.h_of(v) == h);
        }
    CHECK(pg.render(pg.index(2, 1)) == "(2,1)");
    CHECK_THROWS_AS((void) pg.index(3, 0), GraphError);
    CHECK_THROWS_AS((void) pg.index(0, 4), GraphError);
}

TEST_CASE("g and h neighbourhoods")
{
    ProductGraph square{make_complete(2), make_complete(2)};
    auto corner = square.index(0, 0);
    CHECK(square.g_neighbourhood(corner) == std::vector<Id>{square.index(1, 0)});
    CHECK(square.h_neighbourhood(corner) == std::vector<Id>{square.index(0, 1)});

    ProductGraph unit{make_complete(1), make_path(3)};
    for (Id v = 0 ; v < 3 ; ++v)
        CHECK(unit.g_neighbourhood(v).empty());
}

TEST_CASE("g-edges and h-edges partition the edge set")
{
    std::mt19937_64 rng(17);
    for (int t = 0 ; t < 50 ; ++t) {
        ProductGraph pg{oracles::random_graph(rng, 1 + rng() % 4), oracles::random_graph(rng, 1 + rng() % 4)};
        auto ge = pg.g_edges(), he = pg.h_edges();
        CHECK(ge.size() + he.size() == pg.graph().size());
        CHECK(ge.size() == pg.g().size() * pg.h().order());
        CHECK(he.size() == pg.h().size() * pg.g().order());
        for (auto & e : ge)
            CHECK(std::find(he.begin(), he.end(), e) == he.end());
    }
}

TEST_CASE("projections of the worked example")
{
    // G has vertices 0, 1, 2 so that labels 1 and 2 are used directly; H vertices a, b, c are 0, 1, 2.
    ProductGraph pg{make_path(3), make_path(3)};
    Id a = 0, b = 1, c = 2;
    Multiset sample{pg.index(1, b), pg.index(1, c), pg.index(1, c), pg.index(2, a), pg.index(2, a), pg.index(2, a), pg.index(2, b)};
    CHECK(phi_projection(pg, sample, Side::onto_g) == Multiset{1, 1, 2, 2, 2});
    CHECK(psi_projection(pg, sample, Side::onto_g) == Multiset{1, 1, 1, 2, 2, 2, 2});
    CHECK(phi_projection(pg, sample, Side::onto_h) == Multiset{0, 0, 0, 1, 2, 2});
    CHECK(psi_projection(pg, sample, Side::onto_h) == Multiset{0, 0, 0, 1, 1, 2, 2});

    CHECK(phi_projection(pg, Multiset{}, Side::onto_g).empty());
    CHECK(psi_projection(pg, Multiset{}, Side::onto_h).empty());
    CHECK_THROWS_AS(psi_projection(pg, Multiset{9}, Side::onto_g), GraphError);
}

TEST_CASE("psi preserves cardinality and phi is bounded by psi")
{
    std::mt19937_64 rng(23);
    for (int t = 0 ; t < 300 ; ++t) {
        ProductGraph pg{oracles::random_graph(rng, 1 + rng() % 4), oracles::random_graph(rng, 1 + rng() % 4)};
        auto a = oracles::random_multiset(rng, pg.graph().order(), 3, 6);
        for (auto side : {Side::onto_g, Side::onto_h}) {
            CHECK(psi_projection(pg, a, side).cardinality() == a.cardinality());
            CHECK(is_submultiset(phi_projection(pg, a, side), psi_projection(pg, a, side)));
        }
    }
}

TEST_CASE("domination through a G-edge is not preserved by projection")
{
    ProductGraph pg{make_complete(2), make_complete(1)};
    Multiset a{pg.index(0, 0)}, a_prime{pg.index(0, 0), pg.index(1, 0)};
    CHECK(dominates(pg.graph(), a, a_prime));
    CHECK_FALSE(dominates(pg.h(), psi_projection(pg, a, Side::onto_h), psi_projection(pg, a_prime, Side::onto_h)));
}

TEST_CASE("projection preserves domination through H-edges")
{
    std::vector<std::string> failures;
    auto checked = oracles::check_projection_domination(29, 300, failures);
    CHECK(checked == 300);
    for (auto & f : failures)
        FAIL_CHECK(f);
}
