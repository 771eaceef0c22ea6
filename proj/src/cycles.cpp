#include <sr/cycles.hpp>

#include <sr/enumerate.hpp>
#include <sr/matching.hpp>
#include <sr/transforms.hpp>

#include <algorithm>
#include <set>

namespace sr {

auto complete_even_cycle_detail(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<EvenCompletion>
{
    if (a1 == a2 || !inst.acceptable(a1, a2))
        return std::nullopt;
    const Instance folded = construct_IS(inst, a1, a2);
    const Partition aux = find_stable_partition(folded);
    const Cycle & odd = aux.cycle_of(a1);
    if (!odd.is_odd() || odd.size() < 3)
        return std::nullopt;

    // Splice a2 back in right after a1.
    std::vector<AgentId> ring;
    AgentId x = a1;
    do {
        ring.push_back(x);
        if (x == a1)
            ring.push_back(a2);
        x = odd.successor(x);
    } while (x != a1);
    Cycle cycle(ring);

    AgentId a3 = odd.successor(a1);
    bool pair_ok = !(inst.prefers(a1, a3, cycle.predecessor(a1)) && inst.prefers(a3, a1, a2));

    std::vector<Cycle> cycles;
    for (const auto & c : aux.cycles())
        if (!c.contains(a1))
            cycles.push_back(c);
    cycles.push_back(cycle);
    Partition partition(std::move(cycles));
    bool ok = !verify_partition(inst, partition);
    return EvenCompletion{std::move(cycle), std::move(partition), pair_ok, ok};
}

auto fold_even_cycle(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<Cycle>
{
    auto r = complete_even_cycle_detail(inst, a1, a2);
    if (r && r->pair_check && r->fully_verified)
        return r->cycle;
    return std::nullopt;
}

namespace {

// Every even stable cycle sits in the merge of two reduced partitions.
auto merged_even_cycle(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<Cycle>
{
    auto reduced = enumerate_reduced_partitions(inst);
    for (const auto & pa : reduced) {
        if (!pa.covers(a1) || pa.successor(a1) != a2 || !pa.cycle_of(a1).is_transposition())
            continue;
        for (const auto & pb : reduced) {
            if (!pb.covers(a1) || pb.successor(a1) == a2)
                continue;
            auto m = merge(inst, pa, pb);
            if (!m.partition)
                continue;
            const Cycle & c = m.partition->cycle_of(a1);
            if (c.is_even_long() && c.successor(a1) == a2)
                return c;
        }
    }
    return std::nullopt;
}

} // namespace

auto complete_even_cycle(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<Cycle>
{
    if (a1 == a2 || !inst.contains(a1) || !inst.contains(a2) || !inst.acceptable(a1, a2))
        return std::nullopt;
    if (auto c = fold_even_cycle(inst, a1, a2))
        return c;
    return merged_even_cycle(inst, a1, a2);
}

auto verify_cycle(const Instance & inst, const Cycle & c) -> std::optional<Partition>
{
    for (AgentId a : c)
        if (!inst.contains(a))
            return std::nullopt;
    if (c.is_odd()) {
        Partition p = find_stable_partition(inst);
        if (p.covers(c.front()) && p.cycle_of(c.front()) == c)
            return p;
        return std::nullopt;
    }
    if (c.is_transposition()) {
        auto it = construct_IT(inst);
        if (!it.derived.contains(c[0]) || !it.derived.contains(c[1]))
            return std::nullopt;
        for (const auto & m : all_stable_matchings(it.derived))
            if (m.partner(c[0]) == c[1])
                return lift(it, m);
        return std::nullopt;
    }
    if (auto r = complete_even_cycle_detail(inst, c[0], c[1]); r && r->cycle == c && r->pair_check && r->fully_verified)
        return r->partition;
    const auto reduced = enumerate_reduced_partitions(inst);
    for (const auto & pa : reduced)
        for (const auto & pb : reduced)
            if (auto m = merge(inst, pa, pb); m.partition && m.partition->covers(c[0]) && m.partition->cycle_of(c[0]) == c)
                return *m.partition;
    return std::nullopt;
}

auto fixed_cycles(const Instance & inst) -> std::vector<Cycle>
{
    auto it = construct_IT(inst);
    std::vector<Cycle> out = it.odd_cycles;
    for (auto [a, b] : fixed_pairs(it.derived))
        out.emplace_back(std::vector<AgentId>{a, b});
    std::sort(out.begin(), out.end());
    return out;
}

auto reduced_stable_cycles(const Instance & inst) -> std::vector<Cycle>
{
    auto it = construct_IT(inst);
    std::vector<Cycle> out = it.odd_cycles;
    for (auto [a, b] : stable_pairs(it.derived))
        out.emplace_back(std::vector<AgentId>{a, b});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

auto ordered_candidates(std::span<const Pair> pairs) -> std::vector<Pair>
{
    std::vector<Pair> out;
    for (auto [a, b] : pairs) {
        out.emplace_back(a, b);
        out.emplace_back(b, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto with_reduced(const Instance & inst, bool parallel) -> std::vector<Cycle>
{
    auto it = construct_IT(inst);
    auto pairs = stable_pairs(it.derived);
    std::vector<Cycle> out = it.odd_cycles;
    for (auto [a, b] : pairs)
        out.emplace_back(std::vector<AgentId>{a, b});
    auto evens = parallel ? even_stable_cycles_parallel(inst, pairs) : even_stable_cycles(inst, pairs);
    out.insert(out.end(), evens.begin(), evens.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

auto even_stable_cycles(const Instance & inst, std::span<const Pair> stable_transpositions) -> std::vector<Cycle>
{
    // Each even cycle is found once; its consecutive pairs are then skipped.
    std::set<Pair> covered;
    std::vector<Cycle> out;
    for (auto [a, b] : ordered_candidates(stable_transpositions)) {
        if (covered.contains({a, b}))
            continue;
        if (auto c = fold_even_cycle(inst, a, b)) {
            for (AgentId x : *c)
                covered.insert({x, c->successor(x)});
            out.push_back(std::move(*c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto even_stable_cycles_parallel(const Instance & inst, std::span<const Pair> stable_transpositions)
        -> std::vector<Cycle>
{
    const auto candidates = ordered_candidates(stable_transpositions);
    std::vector<std::optional<Cycle>> found(candidates.size());
    const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k)
        found[k] = fold_even_cycle(inst, candidates[k].first, candidates[k].second);

    std::vector<Cycle> out;
    for (auto & c : found)
        if (c)
            out.push_back(std::move(*c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto all_stable_cycles(const Instance & inst) -> std::vector<Cycle>
{
    return with_reduced(inst, false);
}

auto all_stable_cycles_parallel(const Instance & inst) -> std::vector<Cycle>
{
    return with_reduced(inst, true);
}

} // namespace sr
