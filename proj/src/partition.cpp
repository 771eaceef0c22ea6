#include <sr/partition.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sr {

Cycle::Cycle(std::vector<AgentId> agents) : agents_(std::move(agents))
{
    if (agents_.empty())
        throw std::invalid_argument("empty cycle");
    auto sorted = agents_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle repeats an agent");
    if (sorted.front() < 1)
        throw std::invalid_argument("cycle contains a non-positive agent");
    std::rotate(agents_.begin(), std::min_element(agents_.begin(), agents_.end()), agents_.end());
}

auto Cycle::index_of(AgentId a) const -> int
{
    auto it = std::find(agents_.begin(), agents_.end(), a);
    if (it == agents_.end())
        throw std::invalid_argument("agent " + std::to_string(a) + " not on cycle " + to_string());
    return static_cast<int>(it - agents_.begin());
}

auto Cycle::contains(AgentId a) const -> bool
{
    return std::find(agents_.begin(), agents_.end(), a) != agents_.end();
}

auto Cycle::successor(AgentId a) const -> AgentId
{
    return agents_[(index_of(a) + 1) % size()];
}

auto Cycle::predecessor(AgentId a) const -> AgentId
{
    return agents_[(index_of(a) + size() - 1) % size()];
}

auto Cycle::to_string() const -> std::string
{
    std::string out = "(";
    for (std::size_t k = 0; k < agents_.size(); ++k) {
        if (k)
            out += ' ';
        out += std::to_string(agents_[k]);
    }
    return out + ")";
}

Partition::Partition(std::vector<Cycle> cycles) : cycles_(std::move(cycles))
{
    std::sort(cycles_.begin(), cycles_.end(), [](const Cycle & x, const Cycle & y) { return x.front() < y.front(); });
    AgentId top = 0;
    for (const auto & c : cycles_) {
        if (c.size() == 0)
            throw std::invalid_argument("empty cycle in partition");
        top = std::max(top, *std::max_element(c.begin(), c.end()));
    }
    succ_.assign(top + 1, 0);
    pred_.assign(top + 1, 0);
    owner_.assign(top + 1, -1);
    for (std::size_t k = 0; k < cycles_.size(); ++k) {
        const auto & c = cycles_[k];
        for (int i = 0; i < c.size(); ++i) {
            AgentId a = c[i];
            if (owner_[a] != -1)
                throw std::invalid_argument("agent " + std::to_string(a) + " on two cycles");
            owner_[a] = static_cast<int>(k);
            succ_[a] = c[(i + 1) % c.size()];
            pred_[a] = c[(i + c.size() - 1) % c.size()];
        }
    }
}

auto Partition::agents() const -> std::vector<AgentId>
{
    std::vector<AgentId> out;
    for (AgentId a = 1; a < static_cast<int>(succ_.size()); ++a)
        if (succ_[a] != 0)
            out.push_back(a);
    return out;
}

auto Partition::successor(AgentId a) const -> AgentId
{
    if (!covers(a))
        throw std::invalid_argument("agent " + std::to_string(a) + " not in partition");
    return succ_[a];
}

auto Partition::predecessor(AgentId a) const -> AgentId
{
    if (!covers(a))
        throw std::invalid_argument("agent " + std::to_string(a) + " not in partition");
    return pred_[a];
}

auto Partition::cycle_of(AgentId a) const -> const Cycle &
{
    if (!covers(a))
        throw std::invalid_argument("agent " + std::to_string(a) + " not in partition");
    return cycles_[owner_[a]];
}

auto Partition::reduced() const -> bool
{
    return std::none_of(cycles_.begin(), cycles_.end(), [](const Cycle & c) { return c.is_even_long(); });
}

auto Partition::to_string() const -> std::string
{
    std::string out;
    for (const auto & c : cycles_)
        out += c.to_string();
    return out;
}

auto parse_cycle(const std::string & text) -> Cycle
{
    return parse_partition(text).cycles().at(0);
}

auto parse_partition(const std::string & text) -> Partition
{
    std::vector<Cycle> cycles;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' at offset " + std::to_string(pos));
        auto close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unterminated cycle");
        std::istringstream body(text.substr(pos + 1, close - pos - 1));
        std::vector<AgentId> agents;
        std::string token;
        while (body >> token) {
            if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })
                    || token.size() > 9)
                throw std::invalid_argument("bad agent '" + token + "'");
            agents.push_back(std::stoi(token));
        }
        cycles.emplace_back(std::move(agents));
        pos = close + 1;
        skip();
    }
    return Partition(std::move(cycles));
}

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs))
{
    std::vector<AgentId> seen;
    for (auto & [a, b] : pairs_) {
        if (a == b || a < 1 || b < 1)
            throw std::invalid_argument("invalid pair");
        if (a > b)
            std::swap(a, b);
        seen.push_back(a);
        seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("overlapping pairs in matching");
    std::sort(pairs_.begin(), pairs_.end());
}

auto Matching::partner(AgentId a) const -> AgentId
{
    for (auto [x, y] : pairs_) {
        if (x == a)
            return y;
        if (y == a)
            return x;
    }
    return 0;
}

auto Matching::to_string() const -> std::string
{
    std::string out = "{";
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (k)
            out += ", ";
        out += std::to_string(pairs_[k].first) + "-" + std::to_string(pairs_[k].second);
    }
    return out + "}";
}

auto Violation::to_string() const -> std::string
{
    switch (kind) {
    case Kind::NotPermutation:
        return "not a permutation of the agents" + (first ? " (agent " + std::to_string(first) + ")" : std::string());
    case Kind::T1:
        return "T1 violated by agent " + std::to_string(first);
    case Kind::T2:
        return "T2 violated by agents " + std::to_string(first) + " and " + std::to_string(second);
    }
    return {};
}

auto verify_partition(const Instance & inst, const Partition & p) -> std::optional<Violation>
{
    using Kind = Violation::Kind;
    for (AgentId a : p.agents())
        if (!inst.contains(a))
            return Violation{Kind::NotPermutation, a};
    for (AgentId a : inst.agents())
        if (!p.covers(a))
            return Violation{Kind::NotPermutation, a};

    const auto & agents = inst.agents();
    // Cache predecessor positions; used n^2 times below.
    std::vector<int> pred_pos(inst.bound() + 1, 0);
    for (AgentId a : agents) {
        AgentId s = p.successor(a);
        AgentId q = p.predecessor(a);
        if (s != a && (!inst.acceptable(a, s) || !inst.acceptable(a, q)))
            return Violation{Kind::T1, a};
        if (inst.position(a, q) < inst.position(a, s))
            return Violation{Kind::T1, a};
        pred_pos[a] = inst.position(a, q);
    }
    for (std::size_t x = 0; x < agents.size(); ++x) {
        AgentId i = agents[x];
        for (AgentId j : inst.prefs(i)) {
            int rij = inst.raw_rank(i, j);
            if (rij >= pred_pos[i])
                break;
            if (j > i && inst.raw_rank(j, i) < pred_pos[j]) {
                // Preference order is not index order; keep scanning for the
                // smallest j so the witness is lexicographically first.
                AgentId best = j;
                for (AgentId k : inst.prefs(i)) {
                    if (inst.raw_rank(i, k) >= pred_pos[i])
                        break;
                    if (k > i && k < best && inst.raw_rank(k, i) < pred_pos[k])
                        best = k;
                }
                return Violation{Kind::T2, i, best};
            }
        }
    }
    return std::nullopt;
}

auto verify_matching(const Instance & inst, const Matching & m) -> std::vector<Pair>
{
    std::vector<AgentId> partner(inst.bound() + 1, 0);
    for (auto [a, b] : m.pairs()) {
        if (!inst.contains(a) || !inst.contains(b))
            throw std::invalid_argument("matching names an unknown agent");
        if (!inst.acceptable(a, b))
            throw std::invalid_argument("matching pairs unacceptable agents " + std::to_string(a) + " and " + std::to_string(b));
        partner[a] = b;
        partner[b] = a;
    }
    auto current = [&](AgentId a) { return partner[a] ? inst.position(a, partner[a]) : inst.position(a, a); };
    std::vector<Pair> blocking;
    for (AgentId i : inst.agents())
        for (AgentId j : inst.prefs(i))
            if (j > i && partner[i] != j && inst.raw_rank(i, j) < current(i) && inst.raw_rank(j, i) < current(j))
                blocking.emplace_back(i, j);
    std::sort(blocking.begin(), blocking.end());
    return blocking;
}

auto decompose(const Partition & p) -> CycleDecomposition
{
    CycleDecomposition d;
    for (const auto & c : p.cycles()) {
        if (c.is_odd()) {
            d.odds.push_back(c);
            d.n2 += c.size();
        } else {
            (c.size() == 2 ? d.transpositions : d.evens).push_back(c);
            d.n1 += c.size();
        }
    }
    return d;
}

auto break_even_cycle(const Cycle & c) -> std::pair<std::vector<Cycle>, std::vector<Cycle>>
{
    if (!c.is_even_long())
        throw std::invalid_argument("break_even_cycle needs an even cycle of length at least 4");
    std::vector<Cycle> first, second;
    const int len = c.size();
    for (int k = 0; k < len; k += 2) {
        first.emplace_back(std::vector<AgentId>{c[k], c[k + 1]});
        second.emplace_back(std::vector<AgentId>{c[(k + len - 1) % len], c[k]});
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    return {std::move(first), std::move(second)};
}

auto reduce(const Partition & p) -> std::pair<Partition, Partition>
{
    std::vector<Cycle> a, b;
    for (const auto & c : p.cycles()) {
        if (!c.is_even_long()) {
            a.push_back(c);
            b.push_back(c);
            continue;
        }
        auto [x, y] = break_even_cycle(c);
        a.insert(a.end(), x.begin(), x.end());
        b.insert(b.end(), y.begin(), y.end());
    }
    return {Partition(std::move(a)), Partition(std::move(b))};
}

auto merge(const Instance & inst, const Partition & pa, const Partition & pb) -> MergeResult
{
    if (!pa.reduced() || !pb.reduced())
        throw std::invalid_argument("merge needs reduced partitions");
    if (pa.agents() != pb.agents())
        throw std::invalid_argument("merge needs partitions over the same agents");

    std::vector<Cycle> kept;
    std::vector<AgentId> loose;
    for (const auto & c : pa.cycles()) {
        if (pb.cycle_of(c.front()) == c) {
            kept.push_back(c);
            continue;
        }
        if (!c.is_transposition())
            throw std::invalid_argument("merge inputs disagree on an odd cycle");
        loose.push_back(c[0]);
        loose.push_back(c[1]);
    }
    for (AgentId a : loose)
        if (!pb.cycle_of(a).is_transposition())
            throw std::invalid_argument("merge inputs disagree on an odd cycle");
    std::sort(loose.begin(), loose.end());

    std::vector<bool> done(inst.bound() + 1, false);
    for (AgentId start : loose) {
        if (done[start])
            continue;
        AgentId via_a = pa.successor(start);
        AgentId via_b = pb.successor(start);
        // The preferred partner becomes the successor so T1 holds at start.
        bool a_first = inst.position(start, via_a) < inst.position(start, via_b);
        std::vector<AgentId> agents{start};
        done[start] = true;
        AgentId cur = start;
        bool use_a = a_first;
        for (;;) {
            AgentId next = use_a ? pa.successor(cur) : pb.successor(cur);
            use_a = !use_a;
            if (next == start)
                break;
            agents.push_back(next);
            done[next] = true;
            cur = next;
        }
        kept.emplace_back(std::move(agents));
    }

    Partition merged(std::move(kept));
    MergeResult result;
    if (auto v = verify_partition(inst, merged))
        result.violation = v;
    else
        result.partition = std::move(merged);
    return result;
}

auto matching_to_partition(const Matching & m) -> Partition
{
    std::vector<Cycle> cycles;
    for (auto [a, b] : m.pairs())
        cycles.emplace_back(std::vector<AgentId>{a, b});
    return Partition(std::move(cycles));
}

auto matching_to_partition(const Instance & inst, const Matching & m) -> Partition
{
    std::vector<Cycle> cycles;
    std::vector<bool> matched(inst.bound() + 1, false);
    for (auto [a, b] : m.pairs()) {
        cycles.emplace_back(std::vector<AgentId>{a, b});
        matched[a] = matched[b] = true;
    }
    for (AgentId a : inst.agents())
        if (!matched[a])
            cycles.emplace_back(std::vector<AgentId>{a});
    return Partition(std::move(cycles));
}

auto partition_to_matching(const Partition & p) -> Matching
{
    std::vector<Pair> pairs;
    for (const auto & c : p.cycles()) {
        if (!c.is_transposition())
            throw std::invalid_argument("partition has a cycle of length " + std::to_string(c.size()));
        pairs.emplace_back(c[0], c[1]);
    }
    return Matching(std::move(pairs));
}

} // namespace sr
