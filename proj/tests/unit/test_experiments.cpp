#include <sr/experiments.hpp>
#include <sr/matching.hpp>

#include <doctest.h>

#include <sstream>

using namespace sr;

TEST_CASE("per-instance stats are consistent")
{
    for (int k = 0; k < 50; ++k) {
        auto s = instance_stats(8, instance_seed(5, 8, k), 0);
        CHECK(s.solvable == (s.odd_count == 0));
        int total = 0;
        for (int len : s.odd_cycle_lengths)
            total += len;
        CHECK(total == s.odd_agents);
        CHECK(s.rp <= s.p);
        CHECK(s.rsc <= s.sc);
        CHECK(s.odd_count % 2 == 0);
    }
}

TEST_CASE("stats are recomputable from the instance seed")
{
    auto a = instance_stats(10, instance_seed(1, 10, 3), 0);
    auto b = instance_stats(random_instance(10, Seed{a.seed}), 0);
    CHECK(a.p == b.p);
    CHECK(a.sc == b.sc);
    CHECK(a.odd_cycle_lengths == b.odd_cycle_lengths);
}

TEST_CASE("aggregation uses unsolvable instances for odd-cycle fields")
{
    InstanceStats solvable;
    solvable.solvable = true;
    solvable.rp = solvable.p = 2;
    solvable.rsc = solvable.sc = 4;
    InstanceStats odd;
    odd.odd_count = 2;
    odd.odd_agents = 4;
    odd.odd_cycle_lengths = {1, 3};
    odd.hist = {1, 1, 0, 0, 0, 0};
    odd.rp = odd.p = 1;
    odd.rsc = odd.sc = 3;
    auto row = aggregate(4, {solvable, odd});
    CHECK(row.samples == 2);
    CHECK(row.solvable_rate == doctest::Approx(50.0));
    CHECK(row.mean_p == doctest::Approx(1.5));
    CHECK(row.mean_odd_count == doctest::Approx(2.0));
    CHECK(row.mean_odd_agents == doctest::Approx(4.0));
    CHECK(row.mean_odd_len == doctest::Approx(2.0));
    CHECK(row.hist[0] == doctest::Approx(1.0));
}

TEST_CASE("budget exceedances are counted, not fatal")
{
    auto s = instance_stats(10, instance_seed(1, 10, 0), 1);
    CHECK(s.budget_exceeded);
    StatsConfig config{{6}, 5, 9, 1};
    auto rows = run_stats(config);
    CHECK(rows[0].budget_exceeded == 5);
}

TEST_CASE("serial and parallel runs give identical CSV")
{
    StatsConfig config{{4, 7}, 60, 42};
    std::ostringstream a, b, c;
    write_csv(a, run_stats_serial(config));
    write_csv(b, run_stats(config));
    write_csv(c, run_stats(config));
    CHECK(a.str() == b.str());
    CHECK(b.str() == c.str());
    CHECK(a.str().rfind("n,samples,solvable_rate,mean_rp,mean_p,mean_rsc,mean_sc,mean_odd_len,mean_odd_count,"
                        "mean_odd_agents,hist_1,hist_3,hist_5,hist_7,hist_9,hist_11,budget_exceeded\n",
                  0)
            == 0);
}

TEST_CASE("four agents: one 1-cycle and one 3-cycle when unsolvable")
{
    auto rows = run_stats(StatsConfig{{4}, 400, 7});
    CHECK(rows[0].solvable_rate < 100.0);
    CHECK(rows[0].mean_odd_count == doctest::Approx(2.0));
    CHECK(rows[0].hist[0] == doctest::Approx(1.0));
    CHECK(rows[0].hist[1] == doctest::Approx(1.0));
}

TEST_CASE("config checks")
{
    CHECK_THROWS_AS(run_stats(StatsConfig{{4}, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_stats_serial(StatsConfig{{0}, 1, 1}), std::invalid_argument);
}
