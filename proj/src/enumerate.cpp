#include <sr/enumerate.hpp>

#include <sr/cycles.hpp>
#include <sr/matching.hpp>
#include <sr/transforms.hpp>

#include <algorithm>
#include <set>

namespace sr {

auto enumerate_reduced_partitions(const Instance & inst) -> std::vector<Partition>
{
    auto it = construct_IT(inst);
    std::vector<Partition> out;
    for (const auto & m : all_stable_matchings(it.derived))
        out.push_back(lift(it, m));
    std::sort(out.begin(), out.end());
    return out;
}

auto fc_helper(const Instance & inst, const PartialPartition & pp, AgentId a) -> std::optional<Cycle>
{
    if (std::find(pp.remaining.begin(), pp.remaining.end(), a) == pp.remaining.end())
        throw std::invalid_argument("agent " + std::to_string(a) + " is not remaining");
    auto rest = residual_instance(inst, pp.committed);
    if (auto partner = fixed_partner(rest, a))
        return Cycle({a, *partner});
    return std::nullopt;
}

auto extension_feasible(const Instance & inst, std::span<const Cycle> committed) -> bool
{
    std::vector<AgentId> agents;
    std::vector<AgentId> pred(inst.bound() + 1, 0);
    for (const auto & c : committed)
        for (AgentId a : c) {
            agents.push_back(a);
            pred[a] = c.predecessor(a);
            AgentId s = c.successor(a);
            if (inst.position(a, s) > inst.position(a, pred[a]))
                return false;
        }
    for (std::size_t x = 0; x < agents.size(); ++x)
        for (std::size_t y = x + 1; y < agents.size(); ++y) {
            AgentId i = agents[x], j = agents[y];
            if (inst.acceptable(i, j) && inst.prefers(i, j, pred[i]) && inst.prefers(j, i, pred[j]))
                return false;
        }
    auto rest = residual_instance(inst, committed);
    auto p = find_stable_partition(rest);
    return std::all_of(p.cycles().begin(), p.cycles().end(), [](const Cycle & c) { return !c.is_odd(); });
}

namespace {

struct Enumerator {
    const Instance & inst;
    const std::function<void(const Partition &)> & emit;
    Budget * budget;

    void run(std::vector<Cycle> sc, std::vector<Cycle> & committed, std::vector<AgentId> remaining)
    {
        if (budget)
            budget->tick();
        if (remaining.empty()) {
            Partition p(committed);
            if (auto v = verify_partition(inst, p))
                throw std::logic_error("enumeration produced an unstable partition: " + v->to_string());
            emit(p);
            return;
        }
        AgentId a = remaining.front();
        PartialPartition pp{committed, remaining};
        if (auto fixed = fc_helper(inst, pp, a)) {
            descend(sc, committed, remaining, *fixed);
            return;
        }
        for (const auto & c : sc) {
            if (!c.contains(a))
                continue;
            committed.push_back(c);
            bool ok = extension_feasible(inst, committed);
            committed.pop_back();
            if (ok)
                descend(sc, committed, remaining, c);
        }
    }

    void descend(const std::vector<Cycle> & sc, std::vector<Cycle> & committed, const std::vector<AgentId> & remaining,
            const Cycle & chosen)
    {
        std::vector<Cycle> rest_sc;
        for (const auto & c : sc)
            if (std::none_of(c.begin(), c.end(), [&](AgentId x) { return chosen.contains(x); }))
                rest_sc.push_back(c);
        std::vector<AgentId> rest;
        for (AgentId x : remaining)
            if (!chosen.contains(x))
                rest.push_back(x);
        committed.push_back(chosen);
        run(std::move(rest_sc), committed, std::move(rest));
        committed.pop_back();
    }
};

} // namespace

void for_each_partition(const Instance & inst, const std::function<void(const Partition &)> & emit, Budget * budget)
{
    auto all = all_stable_cycles(inst);
    std::vector<Cycle> committed, sc;
    for (auto & c : all)
        (c.is_odd() ? committed : sc).push_back(std::move(c));
    std::vector<char> taken(inst.bound() + 1, 0);
    for (const auto & c : committed)
        for (AgentId a : c)
            taken[a] = 1;
    std::vector<AgentId> remaining;
    for (AgentId a : inst.agents())
        if (!taken[a])
            remaining.push_back(a);
    Enumerator e{inst, emit, budget};
    e.run(std::move(sc), committed, std::move(remaining));
}

auto enumerate_all_partitions(const Instance & inst, Budget * budget) -> std::vector<Partition>
{
    std::vector<Partition> out;
    for_each_partition(inst, [&](const Partition & p) { out.push_back(p); }, budget);
    std::sort(out.begin(), out.end());
    return out;
}

auto enumerate_all_partitions_naive(const Instance & inst) -> std::vector<Partition>
{
    auto reduced = enumerate_reduced_partitions(inst);
    std::set<Partition> out(reduced.begin(), reduced.end());
    for (std::size_t x = 0; x < reduced.size(); ++x)
        for (std::size_t y = x + 1; y < reduced.size(); ++y)
            if (auto m = merge(inst, reduced[x], reduced[y]))
                out.insert(*m.partition);
    return {out.begin(), out.end()};
}

} // namespace sr
