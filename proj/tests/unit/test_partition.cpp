#include "../support.hpp"

#include <sr/partition.hpp>

#include <doctest.h>

using namespace sr;

TEST_CASE("cycles rotate to the smallest agent")
{
    Cycle c({3, 1, 2});
    CHECK(c.to_string() == "(1 2 3)");
    CHECK(c.successor(2) == 3);
    CHECK(c.predecessor(1) == 3);
    CHECK(c.is_odd());
    CHECK_FALSE(Cycle({1, 2, 3}) == Cycle({1, 3, 2}));
    CHECK(Cycle({4, 2}).is_transposition());
    CHECK(Cycle({1, 2, 3, 4}).is_even_long());
    CHECK_THROWS_AS((void)c.successor(9), std::invalid_argument);
}

TEST_CASE("parse and print partitions")
{
    auto p = parse_partition(" (4 5 6) ( 1 2 3 ) ");
    CHECK(p.to_string() == "(1 2 3)(4 5 6)");
    CHECK(p.successor(6) == 4);
    CHECK(p.cycle_of(5) == Cycle({4, 5, 6}));
    CHECK(p.reduced());
    CHECK_FALSE(parse_partition("(1 2 3 4)").reduced());
    CHECK_THROWS(parse_partition("(1 2"));
    CHECK_THROWS(parse_partition("(1 x)"));
    CHECK_THROWS(parse_partition("(1 2)(2 3)"));
    CHECK_THROWS(parse_partition("()"));
}

TEST_CASE("table 2 partition is stable")
{
    auto inst = test::fixture("table2.txt");
    CHECK_FALSE(verify_partition(inst, parse_partition("(1 2 3)(4 5 6)")));
    auto v = verify_partition(inst, parse_partition("(1 2)(3 4)(5 6)"));
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::T2);
}

TEST_CASE("verification reports the first violation")
{
    auto inst = test::fixture("table2.txt");
    auto v = verify_partition(inst, parse_partition("(1 3 2)(4 5 6)"));
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::T1);
    CHECK(v->first == 1);
    auto missing = verify_partition(inst, parse_partition("(1 2 3)"));
    REQUIRE(missing);
    CHECK(missing->kind == Violation::Kind::NotPermutation);
}

TEST_CASE("matching verification on table 1")
{
    auto inst = test::fixture("table1.txt");
    CHECK(verify_matching(inst, Matching({{1, 2}, {3, 4}, {5, 6}})).empty());
    auto blocking = verify_matching(inst, Matching({{1, 6}, {2, 4}, {3, 5}}));
    CHECK_FALSE(blocking.empty());
    CHECK(Matching({{2, 1}, {4, 3}}).to_string() == "{1-2, 3-4}");
    CHECK(Matching({{2, 1}}).partner(1) == 2);
    CHECK(Matching({{2, 1}}).partner(3) == 0);
    CHECK_THROWS_AS(Matching({{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("unmatched agents block with each other")
{
    auto inst = parse_instance("4\n1: 2 3\n2: 1 4\n3: 1\n4: 2\n");
    CHECK(verify_matching(inst, Matching({{1, 2}})).empty());
    auto open = parse_instance("4\n1: 2\n2: 1\n3: 4\n4: 3\n");
    CHECK(verify_matching(open, Matching({{1, 2}})) == std::vector<Pair>{{3, 4}});
}

TEST_CASE("decompose and break")
{
    auto p = parse_partition("(1 2 3 4 5 6)(7 8)(9 10 11)(12)");
    auto d = decompose(p);
    CHECK(d.evens.size() == 1);
    CHECK(d.transpositions.size() == 1);
    CHECK(d.odds.size() == 2);
    auto [a, b] = break_even_cycle(Cycle({1, 2, 3, 4, 5, 6}));
    CHECK(test::strings(a) == std::vector<std::string>{"(1 2)", "(3 4)", "(5 6)"});
    CHECK(test::strings(b) == std::vector<std::string>{"(1 6)", "(2 3)", "(4 5)"});
    CHECK_THROWS(break_even_cycle(Cycle({1, 2})));
    CHECK_THROWS(break_even_cycle(Cycle({1, 2, 3})));
}

TEST_CASE("table 4 reduce and merge")
{
    auto inst = test::fixture("table4.txt");
    auto pi = parse_partition("(1 2 3 4 5 6)");
    auto [pa, pb] = reduce(pi);
    CHECK(pa.to_string() == "(1 2)(3 4)(5 6)");
    CHECK(pb.to_string() == "(1 6)(2 3)(4 5)");
    auto back = merge(inst, pa, pb);
    REQUIRE(back);
    CHECK(*back.partition == pi);

    auto pi3 = parse_partition("(1 4)(2 5)(3 6)");
    auto pi2 = parse_partition("(1 6)(2 3)(4 5)");
    auto failed = merge(inst, pi3, pi2);
    CHECK_FALSE(failed);
    REQUIRE(failed.violation);
    CHECK(failed.violation->kind == Violation::Kind::T2);
    CHECK(failed.violation->first == 1);
    CHECK(failed.violation->second == 2);

    auto pi4 = merge(inst, pa, pi3);
    REQUIRE(pi4);
    CHECK(pi4.partition->to_string() == "(1 4 3 6 5 2)");
    CHECK_THROWS_AS(merge(inst, pi, pa), std::invalid_argument);
}

TEST_CASE("matching and partition conversions")
{
    Matching m({{1, 2}, {3, 4}});
    CHECK(matching_to_partition(m).to_string() == "(1 2)(3 4)");
    auto inst = parse_instance("5\n1: 2\n2: 1\n3: 4\n4: 3\n5:\n");
    CHECK(matching_to_partition(inst, m).to_string() == "(1 2)(3 4)(5)");
    CHECK(partition_to_matching(parse_partition("(1 2)(3 4)")) == m);
    CHECK_THROWS(partition_to_matching(parse_partition("(1 2 3)")));
}
