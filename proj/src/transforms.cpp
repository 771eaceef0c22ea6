#include <sr/transforms.hpp>

#include <sr/matching.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sr {

namespace {

auto identity_map(int bound) -> std::vector<AgentId>
{
    std::vector<AgentId> map(bound + 1);
    for (AgentId a = 0; a <= bound; ++a)
        map[a] = a;
    return map;
}

auto odd_agents_of(const Instance & inst, const std::vector<Cycle> & odd) -> std::vector<char>
{
    std::vector<char> flag(inst.bound() + 1, 0);
    for (const auto & c : odd)
        for (AgentId a : c)
            flag[a] = 1;
    return flag;
}

auto base(const Instance & inst) -> TransformResult
{
    TransformResult r;
    r.base_partition = find_stable_partition(inst);
    r.odd_cycles = decompose(r.base_partition).odds;
    auto odd = odd_agents_of(inst, r.odd_cycles);
    std::vector<AgentId> keep;
    for (AgentId a : inst.agents())
        if (!odd[a])
            keep.push_back(a);
    r.derived = restrict(inst, keep);
    r.agent_map = identity_map(inst.bound());
    return r;
}

/* Scan each non-odd agent's list; from the first odd-cycle agent that would
 * rather have it than its predecessor onward, every pair still present goes. */
auto truncation_pairs(const Instance & inst, const std::vector<Cycle> & odd_cycles) -> std::vector<Pair>
{
    std::vector<AgentId> odd_pred(inst.bound() + 1, 0);
    for (const auto & c : odd_cycles)
        for (AgentId a : c)
            odd_pred[a] = c.predecessor(a);

    const auto stride = static_cast<std::size_t>(inst.bound()) + 1;
    std::vector<char> gone(stride * stride, 0);
    std::vector<Pair> out;
    for (AgentId ai : inst.agents()) {
        if (odd_pred[ai])
            continue;
        bool erase = false;
        for (AgentId aj : inst.prefs(ai)) {
            if (odd_pred[aj] && inst.prefers(aj, ai, odd_pred[aj]))
                erase = true;
            if (erase && !odd_pred[aj] && !gone[ai * stride + aj]) {
                gone[ai * stride + aj] = gone[aj * stride + ai] = 1;
                out.emplace_back(std::min(ai, aj), std::max(ai, aj));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

auto construct_IE(const Instance & inst) -> TransformResult
{
    return base(inst);
}

auto construct_IT(const Instance & inst) -> TransformResult
{
    auto r = base(inst);
    r.deleted_pairs = truncation_pairs(inst, r.odd_cycles);
    r.derived = delete_pairs(r.derived, r.deleted_pairs);
    return r;
}

auto construct_IS(const Instance & inst, AgentId a1, AgentId a2) -> Instance
{
    if (a1 == a2 || !inst.contains(a1) || !inst.contains(a2) || !inst.acceptable(a1, a2))
        throw std::invalid_argument("construct_IS needs two distinct mutually acceptable agents");

    std::vector<std::vector<AgentId>> lists(inst.bound() + 1);
    for (AgentId a : inst.agents())
        lists[a].assign(inst.prefs(a).begin(), inst.prefs(a).end());

    // Agents a2 ranks above a1 now see a1 where a2 used to be.
    std::vector<AgentId> above;
    for (AgentId r : inst.prefs(a2)) {
        if (r == a1)
            break;
        above.push_back(r);
    }
    for (AgentId r : above) {
        auto & list = lists[r];
        if (auto it = std::find(list.begin(), list.end(), a1); it != list.end())
            list.erase(it);
        *std::find(list.begin(), list.end(), a2) = a1;
    }

    // a1 takes those agents at a2's former position, in a2's order.
    auto & own = lists[a1];
    auto k = static_cast<std::size_t>(*inst.rank(a1, a2)) - 1;
    for (AgentId r : above) {
        if (inst.prefers(a1, r, a2))
            continue;
        if (auto it = std::find(own.begin(), own.end(), r); it != own.end())
            own.erase(it);
        own.insert(own.begin() + static_cast<std::ptrdiff_t>(k), r);
        ++k;
    }

    std::vector<AgentId> agents;
    std::vector<std::vector<AgentId>> out;
    for (AgentId a : inst.agents()) {
        if (a == a2)
            continue;
        agents.push_back(a);
        auto & list = out.emplace_back();
        for (AgentId b : lists[a])
            if (b != a2)
                list.push_back(b);
    }
    return Instance(inst.bound(), std::move(agents), std::move(out));
}

auto construct_IP(const Instance & inst) -> TransformResult
{
    auto r = construct_IT(inst);
    const auto & kept = r.derived;
    const int bound = inst.bound();

    // Per list: odd-cycle agents vanish, truncated entries become dummy slots 1, 2, ...
    std::vector<std::vector<AgentId>> lists(bound + 1);
    int dummies = 0;
    for (AgentId a : kept.agents()) {
        int slot = 0;
        for (AgentId b : inst.prefs(a)) {
            if (kept.acceptable(a, b))
                lists[a].push_back(b);
            else if (kept.contains(b))
                lists[a].push_back(-(++slot));
        }
        dummies = std::max(dummies, slot);
    }
    if (dummies % 2)
        ++dummies;

    const int total = bound + dummies;
    std::vector<std::vector<AgentId>> dummy_lists(dummies + 1);
    for (int d = 1; d <= dummies; ++d)
        dummy_lists[d].push_back(bound + (d % 2 ? d + 1 : d - 1));
    for (AgentId a : kept.agents())
        for (auto & entry : lists[a])
            if (entry < 0) {
                dummy_lists[-entry].push_back(a);
                entry = bound - entry;
            }

    std::vector<AgentId> agents;
    std::vector<std::vector<AgentId>> out;
    for (AgentId a : kept.agents()) {
        agents.push_back(a);
        out.push_back(std::move(lists[a]));
    }
    for (int d = 1; d <= dummies; ++d) {
        agents.push_back(bound + d);
        out.push_back(std::move(dummy_lists[d]));
        if (d % 2)
            r.dummy_pairs.emplace_back(bound + d, bound + d + 1);
    }
    r.derived = Instance(total, std::move(agents), std::move(out));
    r.agent_map.resize(total + 1, 0);
    return r;
}

auto lift(const TransformResult & result, const Matching & m) -> Partition
{
    auto source_of = [&](AgentId a) {
        return a < static_cast<int>(result.agent_map.size()) ? result.agent_map[a] : 0;
    };
    std::vector<Cycle> cycles = result.odd_cycles;
    std::vector<char> matched(result.derived.bound() + 1, 0);
    for (auto [a, b] : m.pairs()) {
        matched[a] = matched[b] = 1;
        AgentId sa = source_of(a), sb = source_of(b);
        if (!sa && !sb)
            continue;
        if (!sa || !sb)
            throw std::invalid_argument("matching pairs a dummy with a source agent");
        cycles.emplace_back(std::vector<AgentId>{sa, sb});
    }
    for (AgentId a : result.derived.agents())
        if (source_of(a) && !matched[a])
            throw std::invalid_argument("agent " + std::to_string(a) + " unmatched");
    return Partition(std::move(cycles));
}

auto format_transform(const TransformResult & result) -> std::string
{
    std::ostringstream out;
    write_instance(out, result.derived);
    out << "odd:";
    for (const auto & c : result.odd_cycles)
        out << ' ' << c.to_string();
    out << '\n';
    for (AgentId a : result.derived.agents()) {
        AgentId s = a < static_cast<int>(result.agent_map.size()) ? result.agent_map[a] : 0;
        out << "map: " << a << " -> " << (s ? std::to_string(s) : std::string("dummy")) << '\n';
    }
    return out.str();
}

} // namespace sr
