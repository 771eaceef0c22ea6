#include <sr/matching.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace sr {

namespace {

/* Mutable view over an instance's lists for the proposal and rotation
 * phases. Entries are only ever deleted, in symmetric pairs. */
class Table {
public:
    explicit Table(const Instance & inst) : inst_(inst)
    {
        const auto b = static_cast<std::size_t>(inst.bound()) + 1;
        alive_.resize(b);
        head_.assign(b, 0);
        tail_.assign(b, 0);
        count_.assign(b, 0);
        for (AgentId a : inst.agents()) {
            auto len = inst.prefs(a).size();
            alive_[a].assign(len, 1);
            tail_[a] = static_cast<int>(len);
            count_[a] = static_cast<int>(len);
        }
    }

    auto count(AgentId a) const -> int { return count_[a]; }

    auto first(AgentId a) -> AgentId
    {
        auto & h = head_[a];
        while (!alive_[a][h])
            ++h;
        return inst_.prefs(a)[h];
    }

    auto last(AgentId a) -> AgentId
    {
        auto & t = tail_[a];
        while (!alive_[a][t - 1])
            --t;
        return inst_.prefs(a)[t - 1];
    }

    auto second(AgentId a) -> AgentId
    {
        first(a);
        int k = head_[a] + 1;
        while (!alive_[a][k])
            ++k;
        return inst_.prefs(a)[k];
    }

    void remove(AgentId a, AgentId b)
    {
        int ra = inst_.raw_rank(a, b) - 1;
        int rb = inst_.raw_rank(b, a) - 1;
        if (alive_[a][ra]) {
            alive_[a][ra] = 0;
            --count_[a];
        }
        if (alive_[b][rb]) {
            alive_[b][rb] = 0;
            --count_[b];
        }
    }

    /// Deletes every entry after `keep` in a's list; returns the deleted agents.
    auto truncate_after(AgentId a, AgentId keep) -> std::vector<AgentId>
    {
        std::vector<AgentId> gone;
        auto list = inst_.prefs(a);
        for (int k = inst_.raw_rank(a, keep); k < static_cast<int>(list.size()); ++k)
            if (alive_[a][k]) {
                gone.push_back(list[k]);
                remove(a, list[k]);
            }
        return gone;
    }

    auto alive_list(AgentId a) const -> std::vector<AgentId>
    {
        std::vector<AgentId> out;
        auto list = inst_.prefs(a);
        for (std::size_t k = 0; k < list.size(); ++k)
            if (alive_[a][k])
                out.push_back(list[k]);
        return out;
    }

private:
    const Instance & inst_;
    std::vector<std::vector<char>> alive_;
    std::vector<int> head_;
    std::vector<int> tail_;
    std::vector<int> count_;
};

void propose(const Instance & inst, Table & table)
{
    std::deque<AgentId> free(inst.agents().begin(), inst.agents().end());
    std::vector<AgentId> holder(inst.bound() + 1, 0);
    while (!free.empty()) {
        AgentId x = free.front();
        free.pop_front();
        if (table.count(x) == 0)
            continue;
        AgentId y = table.first(x);
        AgentId previous = holder[y];
        holder[y] = x;
        for (AgentId w : table.truncate_after(y, x))
            if (w == previous)
                free.push_back(w);
    }
}

/* Rotation phase on a proposal-reduced table. Returns an odd cycle found as a
 * rotation covering the same agents as its first choices, or nullopt once
 * every list is down to at most one entry. */
auto rotate(const Instance & inst, Table & table) -> std::optional<Cycle>
{
    for (;;) {
        AgentId start = 0;
        for (AgentId a : inst.agents())
            if (table.count(a) >= 2) {
                start = a;
                break;
            }
        if (start == 0)
            return std::nullopt;

        std::vector<AgentId> seq;
        std::map<AgentId, std::size_t> seen;
        AgentId p = start;
        while (!seen.contains(p)) {
            if (table.count(p) < 2)
                throw std::logic_error("rotation walk reached a list shorter than two");
            seen[p] = seq.size();
            seq.push_back(p);
            p = table.last(table.second(p));
        }
        std::vector<AgentId> xs(seq.begin() + static_cast<std::ptrdiff_t>(seen[p]), seq.end());

        std::vector<AgentId> firsts, seconds;
        for (AgentId x : xs) {
            firsts.push_back(table.first(x));
            seconds.push_back(table.second(x));
        }

        auto xset = xs, fset = firsts;
        std::sort(xset.begin(), xset.end());
        std::sort(fset.begin(), fset.end());
        if (xs.size() % 2 == 1 && xset == fset) {
            std::vector<AgentId> ring{xs.front()};
            for (AgentId a = table.first(xs.front()); a != xs.front(); a = table.first(a)) {
                if (ring.size() > xs.size())
                    throw std::logic_error("odd rotation does not close");
                ring.push_back(a);
            }
            if (ring.size() != xs.size())
                throw std::logic_error("odd rotation does not close");
            return Cycle(std::move(ring));
        }

        std::vector<AgentId> nonempty;
        for (AgentId a : inst.agents())
            if (table.count(a) > 0)
                nonempty.push_back(a);
        for (std::size_t i = 0; i < xs.size(); ++i)
            table.truncate_after(seconds[i], xs[i]);
        for (AgentId a : nonempty)
            if (table.count(a) == 0)
                throw std::logic_error("rotation elimination emptied a list");
    }
}

/* Lists restricted to `keep` agents with per-agent cut ranks, made mutual. */
auto rebuild(const Instance & inst, const std::vector<char> & keep, const std::vector<int> & cut) -> Instance
{
    auto allowed = [&](AgentId a, AgentId b) {
        return keep[a] && keep[b] && inst.raw_rank(a, b) < cut[a] && inst.raw_rank(b, a) < cut[b];
    };
    std::vector<AgentId> agents;
    std::vector<std::vector<AgentId>> lists;
    for (AgentId a : inst.agents()) {
        if (!keep[a])
            continue;
        agents.push_back(a);
        auto & list = lists.emplace_back();
        for (AgentId b : inst.prefs(a))
            if (allowed(a, b))
                list.push_back(b);
    }
    return Instance(inst.bound(), std::move(agents), std::move(lists));
}

auto solvable_with(const Instance & inst, const std::vector<char> & must) -> std::optional<Partition>
{
    Partition p = find_stable_partition(inst);
    for (const auto & c : p.cycles()) {
        if (c.size() >= 3)
            return std::nullopt;
        if (c.size() == 1 && must[c[0]])
            return std::nullopt;
    }
    return p;
}

/* Residual after forcing {x, y}: both leave, and every agent either of them
 * prefers to the other must end up with someone better than them. */
auto force_pair(const Instance & inst, AgentId x, AgentId y, std::vector<char> & must) -> Instance
{
    const auto b = static_cast<std::size_t>(inst.bound()) + 1;
    std::vector<char> keep(b, 0);
    std::vector<int> cut(b, 0);
    for (AgentId a : inst.agents()) {
        keep[a] = 1;
        cut[a] = static_cast<int>(inst.prefs(a).size()) + 1;
    }
    keep[x] = keep[y] = 0;
    for (auto [u, v] : {Pair{x, y}, Pair{y, x}})
        for (AgentId p : inst.prefs(u)) {
            if (p == v)
                break;
            cut[p] = std::min(cut[p], inst.raw_rank(p, u));
            must[p] = 1;
        }
    return rebuild(inst, keep, cut);
}

auto drop_unmatched(const Instance & inst, AgentId x, std::vector<char> & must) -> Instance
{
    const auto b = static_cast<std::size_t>(inst.bound()) + 1;
    std::vector<char> keep(b, 0);
    std::vector<int> cut(b, 0);
    for (AgentId a : inst.agents()) {
        keep[a] = 1;
        cut[a] = static_cast<int>(inst.prefs(a).size()) + 1;
    }
    keep[x] = 0;
    for (AgentId p : inst.prefs(x)) {
        cut[p] = std::min(cut[p], inst.raw_rank(p, x));
        must[p] = 1;
    }
    return rebuild(inst, keep, cut);
}

void enumerate(const Instance & inst, std::vector<char> must, std::vector<Pair> & forced, std::vector<Matching> & out)
{
    auto found = solvable_with(inst, must);
    if (!found)
        return;
    if (inst.size() == 0) {
        out.emplace_back(forced);
        return;
    }
    AgentId x = inst.agents().front();
    if (found->successor(x) == x) {
        auto next = drop_unmatched(inst, x, must);
        enumerate(next, std::move(must), forced, out);
        return;
    }
    const auto table = phase_one_table(inst);
    for (AgentId y : table[x]) {
        auto branch_must = must;
        auto next = force_pair(inst, x, y, branch_must);
        forced.emplace_back(x, y);
        enumerate(next, std::move(branch_must), forced, out);
        forced.pop_back();
    }
}

} // namespace

auto phase_one_table(const Instance & inst) -> std::vector<std::vector<AgentId>>
{
    Table table(inst);
    propose(inst, table);
    std::vector<std::vector<AgentId>> out(inst.bound() + 1);
    for (AgentId a : inst.agents())
        out[a] = table.alive_list(a);
    return out;
}

auto residual_instance(const Instance & inst, std::span<const Cycle> committed) -> Instance
{
    const auto b = static_cast<std::size_t>(inst.bound()) + 1;
    std::vector<char> keep(b, 0);
    std::vector<int> cut(b, 0);
    for (AgentId a : inst.agents()) {
        keep[a] = 1;
        cut[a] = static_cast<int>(inst.prefs(a).size()) + 1;
    }
    for (const auto & c : committed)
        for (AgentId aj : c) {
            if (!inst.contains(aj))
                throw std::invalid_argument("committed cycle names an unknown agent");
            keep[aj] = 0;
            int limit = inst.position(aj, c.predecessor(aj));
            for (AgentId ap : inst.prefs(aj)) {
                if (inst.raw_rank(aj, ap) >= limit)
                    break;
                cut[ap] = std::min(cut[ap], inst.raw_rank(ap, aj));
            }
        }
    return rebuild(inst, keep, cut);
}

auto find_stable_partition(const Instance & inst) -> Partition
{
    std::vector<Cycle> committed;
    Instance current = inst;
    for (;;) {
        Table table(current);
        propose(current, table);
        if (auto odd = rotate(current, table)) {
            committed.push_back(*odd);
            current = residual_instance(inst, committed);
            continue;
        }
        std::vector<Cycle> cycles = committed;
        for (AgentId a : current.agents()) {
            if (table.count(a) == 0) {
                cycles.emplace_back(std::vector<AgentId>{a});
                continue;
            }
            AgentId b = table.first(a);
            if (table.first(b) != a)
                throw std::logic_error("final table is not a matching");
            if (a < b)
                cycles.emplace_back(std::vector<AgentId>{a, b});
        }
        return Partition(std::move(cycles));
    }
}

auto find_stable_matching(const Instance & inst) -> std::optional<Matching>
{
    Partition p = find_stable_partition(inst);
    std::vector<Pair> pairs;
    for (const auto & c : p.cycles()) {
        if (c.size() >= 3)
            return std::nullopt;
        if (c.size() == 2)
            pairs.emplace_back(c[0], c[1]);
    }
    return Matching(std::move(pairs));
}

auto all_stable_matchings(const Instance & inst) -> std::vector<Matching>
{
    std::vector<Matching> out;
    std::vector<Pair> forced;
    enumerate(inst, std::vector<char>(inst.bound() + 1, 0), forced, out);
    std::sort(out.begin(), out.end());
    return out;
}

auto stable_pairs(const Instance & inst) -> std::vector<Pair>
{
    std::set<Pair> pairs;
    for (const auto & m : all_stable_matchings(inst))
        pairs.insert(m.pairs().begin(), m.pairs().end());
    return {pairs.begin(), pairs.end()};
}

auto fixed_pairs(const Instance & inst) -> std::vector<Pair>
{
    auto all = all_stable_matchings(inst);
    if (all.empty())
        return {};
    std::vector<Pair> common = all.front().pairs();
    for (const auto & m : all) {
        std::vector<Pair> next;
        std::set_intersection(common.begin(), common.end(), m.pairs().begin(), m.pairs().end(), std::back_inserter(next));
        common = std::move(next);
    }
    return common;
}

auto fixed_partner(const Instance & inst, AgentId a) -> std::optional<AgentId>
{
    if (!inst.contains(a))
        throw std::invalid_argument("fixed_partner on unknown agent");
    std::vector<char> none(inst.bound() + 1, 0);
    auto found = solvable_with(inst, none);
    if (!found)
        return std::nullopt;
    AgentId partner = found->successor(a);
    if (partner == a)
        return std::nullopt;
    const auto table = phase_one_table(inst);
    for (AgentId y : table[a]) {
        if (y == partner)
            continue;
        auto must = none;
        auto next = force_pair(inst, a, y, must);
        if (solvable_with(next, must))
            return std::nullopt;
    }
    return partner;
}

auto brute_force_matchings(const Instance & inst, int max_agents) -> std::vector<Matching>
{
    if (inst.size() > max_agents)
        throw std::invalid_argument("brute force limited to " + std::to_string(max_agents) + " agents");
    std::vector<Matching> out;
    std::vector<char> used(inst.bound() + 1, 0);
    std::vector<Pair> pairs;
    const auto agents = inst.agents();

    auto rec = [&](auto && self, std::size_t k) -> void {
        while (k < agents.size() && used[agents[k]])
            ++k;
        if (k == agents.size()) {
            Matching m(pairs);
            if (verify_matching(inst, m).empty())
                out.push_back(std::move(m));
            return;
        }
        AgentId a = agents[k];
        used[a] = 1;
        self(self, k + 1);
        for (AgentId b : inst.prefs(a)) {
            if (used[b])
                continue;
            used[b] = 1;
            pairs.emplace_back(a, b);
            self(self, k + 1);
            pairs.pop_back();
            used[b] = 0;
        }
        used[a] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sr
