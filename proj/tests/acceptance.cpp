// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <sr/cycles.hpp>
#include <sr/enumerate.hpp>
#include <sr/experiments.hpp>
#include <sr/matching.hpp>
#include <sr/optimal.hpp>
#include <sr/transforms.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace sr;

namespace {

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point t) -> double
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

auto fixture(const std::string & name) -> Instance
{
    return read_instance_file(std::string(SR_FIXTURE_DIR) + "/" + name);
}

// Collects failure notes; a criterion passes when none were recorded.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string & what)
    {
        if (!ok && failures.size() < 8)
            failures.push_back(what);
        else if (!ok)
            extra = true;
    }
    bool extra = false;
};

auto strings(const std::vector<Partition> & ps) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & p : ps)
        out.push_back(p.to_string());
    return out;
}

auto seeded(int n, int k, std::uint64_t base) -> Instance
{
    return random_instance(n, Seed{instance_seed(base, n, k)});
}

auto tag(int n, int k) -> std::string
{
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";
}

void fixture_table2(Check & c)
{
    auto start = Clock::now();
    auto inst = fixture("table2.txt");
    auto all = enumerate_all_partitions(inst);
    c.expect(strings(all) == std::vector<std::string>{"(1 2 3)(4 5 6)"}, "enumeration is not {(1 2 3)(4 5 6)}");
    auto p = find_stable_partition(inst);
    auto pr = profile(inst, p);
    c.expect(p.to_string() == "(1 2 3)(4 5 6)", "solve returned " + p.to_string());
    c.expect(pr.regret == 5, "regret " + std::to_string(pr.regret));
    c.expect(pr.cost2 == 34, "cost " + pr.cost_string());
    c.expect(seconds_since(start) < 1.0, "slower than 1 s");
}

void fixture_table1(Check & c)
{
    auto inst = fixture("table1.txt");
    c.expect(find_stable_matching(inst).has_value(), "no stable matching found");
    Matching m({{1, 2}, {3, 4}, {5, 6}});
    c.expect(verify_matching(inst, m).empty(), "{1-2, 3-4, 5-6} has blocking pairs");
    auto all = all_stable_matchings(inst);
    c.expect(std::find(all.begin(), all.end(), m) != all.end(), "matching missing from all_stable_matchings");
}

void fixture_table3(Check & c)
{
    auto inst = fixture("table3.txt");
    auto ie = construct_IE(inst);
    c.expect(all_stable_matchings(ie.derived).size() == 2, "I_E does not have 2 stable matchings");
    auto it = construct_IT(inst);
    c.expect(all_stable_matchings(it.derived).size() == 1, "I_T does not have 1 stable matching");
    c.expect(!it.derived.acceptable(1, 3), "{a1, a3} still in I_T");
    c.expect(enumerate_reduced_partitions(inst).size() == 1, "|RP| != 1");
    auto ip = construct_IP(inst);
    const auto & d = ip.derived;
    const AgentId d1 = inst.bound() + 1, d2 = inst.bound() + 2;
    auto starts = [&](AgentId a, std::vector<AgentId> prefix) {
        auto list = d.prefs(a);
        return list.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), list.begin());
    };
    c.expect(starts(1, {2, d1, d2}), "a1 in I_P does not start a2 d1 d2");
    c.expect(starts(3, {d1, 4}), "a3 in I_P does not start d1 a4");
    c.expect(starts(d1, {d2}), "d1 does not rank d2 first");
    c.expect(starts(d2, {d1}), "d2 does not rank d1 first");
}

void fixture_table4(Check & c)
{
    auto inst = fixture("table4.txt");
    auto c12 = complete_even_cycle(inst, 1, 2);
    c.expect(c12 && c12->to_string() == "(1 2 3 4 5 6)", "complete_even_cycle(1, 2)");
    auto c14 = complete_even_cycle(inst, 1, 4);
    c.expect(c14 && c14->to_string() == "(1 4 3 6 5 2)", "complete_even_cycle(1, 4)");
    auto m = merge(inst, parse_partition("(1 4)(2 5)(3 6)"), parse_partition("(1 6)(2 3)(4 5)"));
    c.expect(!m && m.violation && m.violation->kind == Violation::Kind::T2 && m.violation->first == 1
                    && m.violation->second == 2,
            "merging (1 4)(2 5)(3 6) with (1 6)(2 3)(4 5) does not fail on T2 {1, 2}");
    // Frozen from the brute-force oracle.
    const std::vector<std::string> five{
            "(1 2)(3 4)(5 6)", "(1 2 3 4 5 6)", "(1 4)(2 5)(3 6)", "(1 4 3 6 5 2)", "(1 6)(2 3)(4 5)"};
    c.expect(strings(enumerate_all_partitions(inst)) == five, "enumeration differs from the five partitions");
    c.expect(strings(brute_force_partitions(inst)) == five, "brute force differs from the frozen five");
}

void oracle_equivalence(Check & c)
{
    auto start = Clock::now();
    for (int n : {4, 6, 8, 10})
        for (int k = 0; k < 500; ++k) {
            auto inst = seeded(n, k, 501);
            auto brute = brute_force_partitions(inst);
            c.expect(enumerate_all_partitions(inst) == brute, tag(n, k) + "enumeration differs");
            c.expect(enumerate_all_partitions_naive(inst) == brute, tag(n, k) + "naive enumeration differs");
            std::set<Cycle> uni;
            std::map<Cycle, std::size_t> count;
            for (const auto & p : brute)
                for (const auto & cy : p.cycles()) {
                    uni.insert(cy);
                    ++count[cy];
                }
            std::vector<Cycle> inter;
            for (const auto & [cy, k2] : count)
                if (k2 == brute.size())
                    inter.push_back(cy);
            c.expect(all_stable_cycles(inst) == std::vector<Cycle>(uni.begin(), uni.end()), tag(n, k) + "SC differs");
            c.expect(fixed_cycles(inst) == inter, tag(n, k) + "FC differs");
            c.expect(all_stable_matchings(inst) == brute_force_matchings(inst), tag(n, k) + "S(I) differs");
        }
    c.expect(seconds_since(start) < 600, "slower than 10 min");
}

void invariance(Check & c)
{
    for (int n : {16, 20})
        for (int k = 0; k < 200; ++k) {
            auto inst = seeded(n, k, 601);
            auto all = enumerate_all_partitions(inst);
            auto sc = all_stable_cycles(inst);
            for (const auto & p : all)
                c.expect(decompose(p).odds == decompose(all.front()).odds, tag(n, k) + "odd cycles vary");

            std::map<std::pair<AgentId, AgentId>, int> owners;
            for (const auto & cy : sc)
                if (cy.is_even_long())
                    for (AgentId a : cy)
                        ++owners[{a, cy.successor(a)}];
            for (const auto & cy : sc) {
                if (!cy.is_even_long())
                    continue;
                for (AgentId a : cy) {
                    AgentId b = cy.successor(a);
                    c.expect(complete_even_cycle(inst, a, b) == cy,
                            tag(n, k) + "pair (" + std::to_string(a) + "," + std::to_string(b) + ") misses "
                                    + cy.to_string());
                    c.expect(owners[{a, b}] == 1, tag(n, k) + "pair shared by two even cycles");
                }
            }

            for (const auto & p : all) {
                if (p.reduced())
                    continue;
                auto [pa, pb] = reduce(p);
                auto back = merge(inst, pa, pb);
                c.expect(back && *back.partition == p, tag(n, k) + "reduce/merge round trip fails");
            }

            auto rp = enumerate_reduced_partitions(inst);
            c.expect(rp.size() == all_stable_matchings(construct_IT(inst).derived).size(),
                    tag(n, k) + "|RP| != |S(I_T)|");
            auto ip = construct_IP(inst);
            std::vector<Partition> lifted;
            for (const auto & m : all_stable_matchings(ip.derived)) {
                auto p = lift(ip, m);
                c.expect(!verify_partition(inst, p) && p.reduced(), tag(n, k) + "lift not a reduced stable partition");
                lifted.push_back(p);
            }
            std::sort(lifted.begin(), lifted.end());
            c.expect(lifted == rp, tag(n, k) + "S(I_P) does not lift bijectively onto RP");
        }
}

void bridges(Check & c)
{
    int tested = 0;
    const int sizes[] = {4, 6, 8, 10, 12};
    for (int k = 0; tested < 300; ++k) {
        int n = sizes[k % 5];
        auto inst = seeded(n, k, 701);
        auto matchings = all_stable_matchings(inst);
        if (matchings.empty())
            continue;
        ++tested;
        auto all = enumerate_all_partitions(inst);
        auto rp = enumerate_reduced_partitions(inst);

        int p1_all = 0, p1_s = 0;
        long long cost_all = -1, cost_s = -1;
        for (const auto & p : all) {
            auto pr = profile(inst, p);
            p1_all = std::max(p1_all, pr.first_choices());
            if (cost_all < 0 || pr.cost2 < cost_all)
                cost_all = pr.cost2;
        }
        for (const auto & m : matchings) {
            auto pr = matching_profile(inst, m);
            p1_s = std::max(p1_s, pr.first_choices());
            if (cost_s < 0 || pr.cost2 < cost_s)
                cost_s = pr.cost2;
        }
        c.expect(p1_all == 2 * p1_s, tag(n, k) + "max p1 over P != 2 x max over S");
        c.expect(cost_all == cost_s, tag(n, k) + "min cost over P != min cost over S");

        for (auto crit : {Criterion::MinRegret, Criterion::FirstChoice, Criterion::RegretMin, Criterion::Egalitarian}) {
            auto over = [&](const std::vector<Partition> & space) {
                const Partition * best = nullptr;
                Profile best_profile;
                for (const auto & p : space) {
                    auto pr = profile(inst, p);
                    if (!best || better(crit, pr, best_profile)) {
                        best = &p;
                        best_profile = pr;
                    }
                }
                return best_profile;
            };
            auto on_rp = over(rp), on_p = over(all);
            c.expect(!better(crit, on_p, on_rp) && !better(crit, on_rp, on_p),
                    tag(n, k) + std::string(criterion_name(crit)) + " optimum over RP differs from P");
        }
    }
}

auto stats_row(int n, int samples, std::uint64_t seed) -> AggregateRow
{
    return run_stats(StatsConfig{{n}, samples, seed})[0];
}

void replication(Check & c)
{
    auto start = Clock::now();
    auto row = stats_row(10, 2000, 0);
    auto within = [&](double v, double lo, double hi, const char * name) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s = %.4f outside [%.2f, %.2f]", name, v, lo, hi);
        c.expect(v >= lo && v <= hi, buf);
    };
    within(row.solvable_rate, 86.3, 91.3, "solvable %");
    within(row.mean_rp, 1.28, 1.48, "mean |RP|");
    within(row.mean_p, 1.61, 1.91, "mean |P|");
    within(row.mean_rsc, 5.4, 6.2, "mean |RSC|");
    within(row.mean_sc, 5.8, 6.6, "mean |SC|");
    within(row.mean_odd_count, 2.00, 2.02, "mean odd count");
    within(row.mean_odd_agents, 4.9, 5.6, "mean agents in odd cycles");
    within(row.mean_odd_len, 2.45, 2.80, "mean odd length");
    c.expect(row.budget_exceeded == 0, "budget exceeded");
    c.expect(seconds_since(start) < 300, "slower than 5 min");
}

void trend(Check & c)
{
    auto r20 = stats_row(20, 2000, 0);
    auto r50 = stats_row(50, 2000, 0);
    for (const auto * r : {&r20, &r50}) {
        auto top = std::max_element(r->hist.begin(), r->hist.end()) - r->hist.begin();
        c.expect(top == 1, "n=" + std::to_string(r->n) + ": length " + std::to_string(odd_lengths[top])
                        + " is more frequent than 3");
    }
    c.expect(r50.hist[0] < r20.hist[0], "1-cycles not rarer at n=50 than at n=20");
}

void gadget(Check & c)
{
    int tested = 0;
    for (int k = 0; tested < 100; ++k) {
        auto inst = seeded(10, k, 1001);
        if (!find_stable_matching(inst))
            continue;
        ++tested;
        auto g = attach_gadget(inst);
        c.expect(!find_stable_matching(g), tag(10, k) + "gadget instance solvable");
        const Cycle b123({11, 12, 13}), b456({14, 15, 16});
        auto it = construct_IT(g);
        c.expect(it.odd_cycles == std::vector<Cycle>{b123, b456}, tag(10, k) + "odd cycles are not the gadget's");
        std::vector<Partition> mapped;
        for (const auto & p : enumerate_all_partitions(inst)) {
            auto cycles = p.cycles();
            cycles.push_back(b123);
            cycles.push_back(b456);
            mapped.emplace_back(std::move(cycles));
        }
        std::sort(mapped.begin(), mapped.end());
        auto out = enumerate_all_partitions(g);
        c.expect(out == mapped, tag(10, k) + "P(output) is not P(input) plus the gadget cycles");
        for (const auto & q : out) {
            std::vector<Cycle> rest;
            for (const auto & cy : q.cycles())
                if (cy.front() <= 10)
                    rest.push_back(cy);
            c.expect(profile(g, q).first_choices() == profile(inst, Partition(rest)).first_choices(),
                    tag(10, k) + "first-choice count changes");
        }
    }
}

} // namespace

int main()
{
    struct Criterion_ {
        const char * name;
        std::function<void(Check &)> run;
    };
    const std::vector<Criterion_> criteria{
            {"table2 fixture exactness", fixture_table2},
            {"table1 fixture exactness", fixture_table1},
            {"table3 transform correctness", fixture_table3},
            {"table4 cycle machinery", fixture_table4},
            {"oracle equivalence, 500 instances at n = 4, 6, 8, 10", oracle_equivalence},
            {"invariance and uniqueness, n = 16 and 20", invariance},
            {"optimality bridges, 300 solvable instances", bridges},
            {"statistical replication, n = 10, 2000 samples", replication},
            {"odd-length trend, n = 20 and 50", trend},
            {"gadget, 100 solvable n = 10 instances", gadget},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto start = Clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception & e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s %zu: %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, seconds_since(start));
        for (const auto & f : c.failures)
            std::printf("    %s\n", f.c_str());
        if (c.extra)
            std::printf("    ...\n");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
