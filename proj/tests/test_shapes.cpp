#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ehall/partition.hpp"

using namespace ehall;

TEST_CASE("partition statistics")
{
    CHECK(Partition{3}.iota() == 2);
    CHECK(Partition{2, 1}.iota() == 1);
    CHECK(Partition{2, 1}.bar() == Partition{1});
    CHECK(Partition{2, 1}.z() == 2);
    CHECK(Partition{1, 1, 1}.z() == 6);
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{3, 2}.nstat() == 2);
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{1, 1}.bar() == Partition{});
}

TEST_CASE("invalid partitions are rejected")
{
    CHECK_THROWS_AS(Partition({1, 2}), ShapeError);
    CHECK_THROWS_AS(Partition({2, 0}), ShapeError);
    CHECK_THROWS_AS(Composition({1, 0}), ShapeError);
    CHECK(Partition::from_unsorted({1, 0, 3}) == Partition{3, 1});
}

TEST_CASE("subset and composition bijection")
{
    CHECK(composition_to_subset(Composition{1, 2}) == std::set<int>{1});
    CHECK(subset_to_composition(3, {}) == Composition{3});
    CHECK(subset_to_composition(4, {1, 3}) == Composition{1, 2, 1});
    CHECK_THROWS_AS(subset_to_composition(3, {3}), ShapeError);
    CHECK_THROWS_AS(subset_to_composition(3, {0}), ShapeError);

    // brute force over all subsets of {1,2,3}
    std::set<Composition> seen;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::set<int> s;
        for (int b = 0; b < 3; ++b) {
            if (mask & (1u << b)) {
                s.insert(b + 1);
            }
        }
        const Composition c = subset_to_composition(4, s);
        CHECK(c.size() == 4);
        CHECK(composition_to_subset(c) == s);
        seen.insert(c);
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("enumeration")
{
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    CHECK(compositions_of(3).size() == 4);
    CHECK(compositions_of(3).front() == Composition{3});
    const int pcount[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int d = 0; d <= 8; ++d) {
        CHECK(static_cast<int>(partitions_of(d).size()) == pcount[d]);
        const auto& ps = partitions_of(d);
        CHECK(std::is_sorted(ps.begin(), ps.end()));
    }
}

TEST_CASE("partition properties")
{
    for (int d = 0; d <= 8; ++d) {
        mpq_class total = 0;
        for (const auto& mu : partitions_of(d)) {
            CHECK(mu.conjugate().conjugate() == mu);
            CHECK(mu.conjugate().size() == mu.size());
            total += mpq_class(1, 1) / mpq_class(mu.z());
        }
        CHECK(total == 1);
    }
    for (int j = 0; j <= 8; ++j) {
        for (int k = 0; k <= 8; ++k) {
            CHECK(hook(j, k).iota() == j);
        }
    }
}
