#include <sr/profile.hpp>

#include <stdexcept>

namespace sr {

namespace {

void bump(std::vector<int> & v, int rank)
{
    if (rank < 1 || rank > static_cast<int>(v.size()))
        throw std::invalid_argument("rank " + std::to_string(rank) + " outside profile");
    ++v[rank - 1];
}

void finish(Profile & p)
{
    p.combined.assign(p.successor.size(), 0);
    for (std::size_t k = 0; k < p.combined.size(); ++k)
        p.combined[k] = p.successor[k] + p.predecessor[k];
    p.regret = 0;
    for (std::size_t k = 0; k < p.combined.size(); ++k)
        if (p.combined[k] > 0)
            p.regret = static_cast<int>(k) + 1;
}

} // namespace

auto Profile::cost_string() const -> std::string
{
    return std::to_string(cost2 / 2) + (cost2 % 2 ? ".5" : "");
}

auto profile(const Instance & inst, const Partition & p) -> Profile
{
    Profile out;
    const auto n = static_cast<std::size_t>(inst.size());
    out.successor.assign(n, 0);
    out.predecessor.assign(n, 0);
    for (AgentId a : inst.agents()) {
        AgentId s = p.successor(a);
        AgentId q = p.predecessor(a);
        if (s == a) {
            int slot = static_cast<int>(inst.prefs(a).size()) + 1;
            bump(out.successor, slot);
            bump(out.predecessor, slot);
            continue;
        }
        int rs = inst.raw_rank(a, s);
        int rq = inst.raw_rank(a, q);
        if (rs == 0 || rq == 0)
            throw std::invalid_argument("partition pairs unacceptable agents");
        bump(out.successor, rs);
        bump(out.predecessor, rq);
        out.cost2 += rs + rq;
    }
    finish(out);
    return out;
}

auto matching_profile(const Instance & inst, const Matching & m) -> Profile
{
    Profile out;
    const auto n = static_cast<std::size_t>(inst.size());
    out.successor.assign(n, 0);
    out.predecessor.assign(n, 0);
    for (auto [a, b] : m.pairs()) {
        int ra = inst.raw_rank(a, b);
        int rb = inst.raw_rank(b, a);
        if (ra == 0 || rb == 0)
            throw std::invalid_argument("matching pairs unacceptable agents");
        bump(out.successor, ra);
        bump(out.successor, rb);
        out.cost2 += 2 * (ra + rb);
    }
    finish(out);
    return out;
}

auto compare_profiles(std::span<const int> x, std::span<const int> y, Order mode) -> std::strong_ordering
{
    if (x.size() != y.size())
        throw std::invalid_argument("profile lengths differ");
    const auto n = x.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = mode == Order::Forward ? k : n - 1 - k;
        if (auto c = x[i] <=> y[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

auto format_vector(std::span<const int> v) -> std::string
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(v[k]);
    }
    return out + ")";
}

} // namespace sr
