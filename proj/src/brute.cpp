#include <sr/enumerate.hpp>

#include <algorithm>
#include <stdexcept>

namespace sr {

/* Assigns predecessors agent by agent. T2 is checked as soon as both
 * predecessors are known, T1 as soon as both neighbours are. */
auto brute_force_partitions(const Instance & inst, int max_agents) -> std::vector<Partition>
{
    if (inst.size() > max_agents)
        throw std::invalid_argument("brute force limited to " + std::to_string(max_agents) + " agents");

    const auto agents = inst.agents();
    const auto b = static_cast<std::size_t>(inst.bound()) + 1;
    std::vector<AgentId> pred(b, 0), succ(b, 0);
    std::vector<AgentId> assigned;
    std::vector<Partition> out;

    auto t1_ok = [&](AgentId a) {
        if (pred[a] == 0 || succ[a] == 0)
            return true;
        return inst.position(a, succ[a]) <= inst.position(a, pred[a]);
    };

    auto rec = [&](auto && self, std::size_t k) -> void {
        if (k == agents.size()) {
            std::vector<Cycle> cycles;
            std::vector<char> seen(b, 0);
            for (AgentId a : agents) {
                if (seen[a])
                    continue;
                std::vector<AgentId> ring;
                for (AgentId x = a; !seen[x]; x = succ[x]) {
                    seen[x] = 1;
                    ring.push_back(x);
                }
                cycles.emplace_back(std::move(ring));
            }
            Partition p(std::move(cycles));
            if (!verify_partition(inst, p))
                out.push_back(std::move(p));
            return;
        }
        AgentId i = agents[k];
        auto candidates = std::vector<AgentId>(inst.prefs(i).begin(), inst.prefs(i).end());
        candidates.push_back(i);
        for (AgentId q : candidates) {
            if (succ[q] != 0)
                continue;
            pred[i] = q;
            succ[q] = i;
            bool ok = t1_ok(i) && t1_ok(q);
            int pi = inst.position(i, q);
            for (AgentId j : assigned) {
                if (!ok)
                    break;
                if (inst.acceptable(i, j) && inst.position(i, j) < pi
                        && inst.position(j, i) < inst.position(j, pred[j]))
                    ok = false;
            }
            if (ok) {
                assigned.push_back(i);
                self(self, k + 1);
                assigned.pop_back();
            }
            pred[i] = 0;
            succ[q] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sr
