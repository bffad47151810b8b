#include <kdom/multiset.hh>

#include "../support/oracles.hh"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace kdom;

TEST_CASE("count")
{
    Multiset a{1, 2, 2};
    CHECK(a.count(2) == 2);
    CHECK(a.count(4) == 0);
    CHECK(Multiset{}.count(7) == 0);
}

TEST_CASE("count over a set")
{
    Multiset a{1, 1, 2, 5, 6, 6};
    std::vector<Id> b{1, 4, 6};
    CHECK(a.count_over(b) == 4);
    CHECK(a.count_over(std::vector<Id>{}) == 0);
    CHECK(Multiset{1, 2, 2}.count_over(std::vector<Id>{2}) == 2);
}

TEST_CASE("union")
{
    CHECK(multiset_union(Multiset{1, 2, 2}, Multiset{1, 2, 3}) == Multiset{1, 1, 2, 2, 2, 3});
    Multiset a{4, 4, 9};
    CHECK(multiset_union(a, Multiset{}) == a);
    CHECK(multiset_union(Multiset{5}, Multiset{5}) == Multiset{5, 5});
}

TEST_CASE("power union")
{
    CHECK(power_union(Multiset{1, 2, 2}, 2) == Multiset{1, 1, 2, 2, 2, 2});
    Multiset a{0, 3, 3};
    CHECK(power_union(a, 1) == a);
    CHECK(power_union(Multiset{3}, 4) == Multiset{3, 3, 3, 3});
    CHECK(power_union(a, 5).cardinality() == 5 * a.cardinality());
    CHECK_THROWS_AS(power_union(a, 0), std::invalid_argument);
}

TEST_CASE("sub-multiset")
{
    CHECK(is_submultiset(Multiset{1, 2, 2}, Multiset{1, 2, 2, 2}));
    CHECK_FALSE(is_submultiset(Multiset{1, 2, 2}, Multiset{1, 2}));
    CHECK(is_submultiset(Multiset{}, Multiset{1, 2}));
    CHECK(is_submultiset(Multiset{}, Multiset{}));
}

TEST_CASE("intersection")
{
    CHECK(intersect(Multiset{1, 1, 1, 2, 2, 3}, Multiset{1, 1, 2, 4}) == Multiset{1, 1, 2});
    Multiset a{2, 7, 7};
    CHECK(intersect(a, Multiset{}).empty());
    CHECK(intersect(a, a) == a);
}

TEST_CASE("cardinality")
{
    CHECK(Multiset{1, 2, 2}.cardinality() == 3);
    CHECK(Multiset{}.cardinality() == 0);
}

TEST_CASE("construction and mutation")
{
    std::vector<Id> xs{3, 1, 3};
    auto a = Multiset::from_elements(xs);
    CHECK(a == Multiset{1, 3, 3});
    CHECK(a.elements() == std::vector<Id>{1, 3, 3});
    CHECK(a.distinct() == 2);
    CHECK(a.max_element() == 3);
    CHECK(a.max_multiplicity() == 2);

    a.add(1, 0);
    CHECK(a.cardinality() == 3);
    CHECK(a.remove(3, 5) == 2);
    CHECK(a == Multiset{1});
    CHECK(a.remove(8) == 0);

    std::vector<std::pair<Id, Count>> counts{{2, 3}, {0, 1}};
    CHECK(Multiset::from_counts(counts) == Multiset{0, 2, 2, 2});
    CHECK(to_string(Multiset{1, 2, 2}) == "{1,2,2}");
    CHECK(to_string(Multiset{}) == "{}");
    CHECK_THROWS((void) Multiset{}.max_element());
}

TEST_CASE("multiset laws hold on random inputs")
{
    std::vector<std::string> failures;
    auto checked = oracles::check_multiset_laws(11, 2000, failures);
    CHECK(checked == 2000);
    for (auto & f : failures)
        FAIL_CHECK(f);
}
