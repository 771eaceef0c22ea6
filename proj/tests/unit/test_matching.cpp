#include "../support.hpp"

#include <sr/matching.hpp>

#include <doctest.h>

using namespace sr;

TEST_CASE("table 1 is solvable")
{
    auto inst = test::fixture("table1.txt");
    auto m = find_stable_matching(inst);
    REQUIRE(m);
    CHECK(verify_matching(inst, *m).empty());
    auto all = all_stable_matchings(inst);
    CHECK(all == brute_force_matchings(inst));
    CHECK(std::find(all.begin(), all.end(), Matching({{1, 2}, {3, 4}, {5, 6}})) != all.end());
    CHECK(fixed_pairs(inst) == std::vector<Pair>{{5, 6}});
}

TEST_CASE("table 2 is unsolvable")
{
    auto inst = test::fixture("table2.txt");
    CHECK_FALSE(find_stable_matching(inst));
    CHECK(all_stable_matchings(inst).empty());
    CHECK(stable_pairs(inst).empty());
    CHECK(fixed_pairs(inst).empty());
    CHECK(find_stable_partition(inst).to_string() == "(1 2 3)(4 5 6)");
}

TEST_CASE("table 4 has three stable matchings")
{
    auto inst = test::fixture("table4.txt");
    auto all = all_stable_matchings(inst);
    CHECK(all.size() == 3);
    CHECK(all == brute_force_matchings(inst));
    CHECK(stable_pairs(inst).size() == 9);
    CHECK(fixed_pairs(inst).empty());
    CHECK_FALSE(fixed_partner(inst, 1));
}

TEST_CASE("found partition is stable on incomplete lists")
{
    auto inst = parse_instance("5\n1: 2 3\n2: 3 1\n3: 1 2\n4: 5\n5: 4\n");
    auto p = find_stable_partition(inst);
    CHECK_FALSE(verify_partition(inst, p));
    CHECK(p.to_string() == "(1 2 3)(4 5)");
    auto alone = parse_instance("3\n1: 2\n2: 1\n3:\n");
    CHECK(find_stable_partition(alone).to_string() == "(1 2)(3)");
}

TEST_CASE("phase one keeps every stable pair")
{
    auto inst = test::fixture("table1.txt");
    auto table = phase_one_table(inst);
    for (auto [a, b] : stable_pairs(inst))
        CHECK(std::find(table[a].begin(), table[a].end(), b) != table[a].end());
}

TEST_CASE("brute force refuses large instances")
{
    CHECK_THROWS_AS(brute_force_matchings(random_instance(14, Seed{1})), std::invalid_argument);
}

TEST_CASE("residual drops committed agents")
{
    auto inst = test::fixture("table3.txt");
    std::vector<Cycle> odd{Cycle({5, 6, 7}), Cycle({8, 9, 10})};
    auto rest = residual_instance(inst, odd);
    CHECK(rest.size() == 4);
    CHECK_FALSE(rest.acceptable(1, 3));
    CHECK(all_stable_matchings(rest).size() == 1);
}
