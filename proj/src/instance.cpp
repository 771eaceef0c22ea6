#include <sr/instance.hpp>
#include <sr/random.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sr {

ParseError::ParseError(Kind kind, int line, const std::string & what) :
    std::runtime_error("line " + std::to_string(line) + ": " + what),
    kind_(kind),
    line_(line)
{
}

Instance::Instance(std::vector<std::vector<AgentId>> prefs) :
    bound_(static_cast<int>(prefs.size())),
    agents_(prefs.size()),
    present_(prefs.size() + 1, true),
    prefs_(prefs.size() + 1)
{
    present_[0] = false;
    std::iota(agents_.begin(), agents_.end(), 1);
    for (std::size_t i = 0; i < prefs.size(); ++i)
        prefs_[i + 1] = std::move(prefs[i]);
    build();
}

Instance::Instance(int bound, std::vector<AgentId> agents, std::vector<std::vector<AgentId>> lists) :
    bound_(bound),
    present_(static_cast<std::size_t>(bound) + 1, false),
    prefs_(static_cast<std::size_t>(bound) + 1)
{
    if (agents.size() != lists.size())
        throw std::invalid_argument("agent and list counts differ");
    for (std::size_t k = 0; k < agents.size(); ++k) {
        AgentId a = agents[k];
        if (a < 1 || a > bound)
            throw std::invalid_argument("agent " + std::to_string(a) + " out of range");
        if (present_[a])
            throw std::invalid_argument("agent " + std::to_string(a) + " listed twice");
        present_[a] = true;
        prefs_[a] = std::move(lists[k]);
    }
    std::sort(agents.begin(), agents.end());
    agents_ = std::move(agents);
    build();
}

void Instance::build()
{
    const auto stride = static_cast<std::size_t>(bound_) + 1;
    rank_.assign(stride * stride, 0);
    for (AgentId i : agents_) {
        const auto & list = prefs_[i];
        for (std::size_t pos = 0; pos < list.size(); ++pos) {
            AgentId j = list[pos];
            if (j == i)
                throw std::invalid_argument("agent " + std::to_string(i) + " ranks itself");
            if (!contains(j))
                throw std::invalid_argument("agent " + std::to_string(i) + " ranks unknown agent " + std::to_string(j));
            int & slot = rank_[i * stride + j];
            if (slot != 0)
                throw std::invalid_argument("agent " + std::to_string(i) + " ranks " + std::to_string(j) + " twice");
            slot = static_cast<int>(pos) + 1;
        }
    }
    for (AgentId i : agents_)
        for (AgentId j : prefs_[i])
            if (raw_rank(j, i) == 0)
                throw std::invalid_argument(
                        "acceptability not mutual between " + std::to_string(i) + " and " + std::to_string(j));
}

auto Instance::rank(AgentId i, AgentId j) const -> std::optional<int>
{
    if (i == j)
        throw std::invalid_argument("rank of an agent for itself");
    if (!contains(i) || !contains(j))
        throw std::invalid_argument("rank query on unknown agent");
    int r = raw_rank(i, j);
    if (r == 0)
        return std::nullopt;
    return r;
}

auto Instance::complete() const noexcept -> bool
{
    for (AgentId a : agents_)
        if (static_cast<int>(prefs_[a].size()) != size() - 1)
            return false;
    return true;
}

namespace {

auto strip(std::string_view s) -> std::string_view
{
    auto hash = s.find('#');
    if (hash != std::string_view::npos)
        s = s.substr(0, hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

auto parse_int(std::string_view token, int line) -> int
{
    if (token.empty() || token.size() > 9 || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(ParseError::Kind::Malformed, line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return std::stoi(std::string(token));
}

} // namespace

auto parse_instance(std::istream & in) -> Instance
{
    using Kind = ParseError::Kind;
    std::string raw;
    int line_no = 0;
    std::optional<int> bound;
    std::vector<std::vector<AgentId>> lists;
    std::vector<int> line_of;
    std::vector<AgentId> agents;

    while (std::getline(in, raw)) {
        ++line_no;
        auto text = strip(raw);
        if (text.empty())
            continue;
        if (!bound) {
            bound = parse_int(text, line_no);
            lists.assign(*bound + 1, {});
            line_of.assign(*bound + 1, 0);
            continue;
        }
        auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(Kind::Malformed, line_no, "expected 'i: j1 j2 ...'");
        int who = parse_int(strip(text.substr(0, colon)), line_no);
        if (who < 1 || who > *bound)
            throw ParseError(Kind::OutOfRange, line_no, "agent " + std::to_string(who) + " out of range");
        if (line_of[who] != 0)
            throw ParseError(Kind::Duplicate, line_no, "agent " + std::to_string(who) + " listed twice");
        line_of[who] = line_no;
        agents.push_back(who);

        std::istringstream tokens{std::string(text.substr(colon + 1))};
        std::string token;
        std::vector<bool> seen(*bound + 1, false);
        while (tokens >> token) {
            int j = parse_int(token, line_no);
            if (j < 1 || j > *bound)
                throw ParseError(Kind::OutOfRange, line_no, "agent " + std::to_string(j) + " out of range");
            if (j == who)
                throw ParseError(Kind::SelfPreference, line_no, "agent " + std::to_string(who) + " ranks itself");
            if (seen[j])
                throw ParseError(Kind::Duplicate, line_no, "agent " + std::to_string(j) + " appears twice");
            seen[j] = true;
            lists[who].push_back(j);
        }
    }
    if (!bound)
        throw ParseError(Kind::Malformed, line_no, "missing agent count");

    // A header with no agent lines means agents 1..n with empty lists, except
    // n = 0. Otherwise every listed agent must itself have a line.
    if (agents.empty())
        for (AgentId a = 1; a <= *bound; ++a)
            agents.push_back(a);

    for (AgentId i : agents)
        for (AgentId j : lists[i]) {
            if (line_of[j] == 0 && !(line_of[i] == 0))
                throw ParseError(Kind::OutOfRange, line_of[i], "agent " + std::to_string(j) + " has no preference line");
            if (std::find(lists[j].begin(), lists[j].end(), i) == lists[j].end())
                throw ParseError(Kind::NotMutual, line_of[i],
                        "agent " + std::to_string(i) + " accepts " + std::to_string(j) + " but not vice versa");
        }

    std::vector<std::vector<AgentId>> ordered;
    ordered.reserve(agents.size());
    for (AgentId a : agents)
        ordered.push_back(std::move(lists[a]));
    return Instance(*bound, std::move(agents), std::move(ordered));
}

auto parse_instance(const std::string & text) -> Instance
{
    std::istringstream in(text);
    return parse_instance(in);
}

auto read_instance_file(const std::string & path) -> Instance
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

void write_instance(std::ostream & out, const Instance & inst)
{
    out << inst.bound() << '\n';
    for (AgentId a : inst.agents()) {
        out << a << ':';
        for (AgentId b : inst.prefs(a))
            out << ' ' << b;
        out << '\n';
    }
}

auto serialize_instance(const Instance & inst) -> std::string
{
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

auto restrict(const Instance & inst, std::span<const AgentId> keep) -> Instance
{
    std::vector<bool> kept(static_cast<std::size_t>(inst.bound()) + 1, false);
    for (AgentId a : keep)
        if (inst.contains(a))
            kept[a] = true;

    std::vector<AgentId> agents;
    std::vector<std::vector<AgentId>> lists;
    for (AgentId a : inst.agents()) {
        if (!kept[a])
            continue;
        agents.push_back(a);
        auto & list = lists.emplace_back();
        for (AgentId b : inst.prefs(a))
            if (kept[b])
                list.push_back(b);
    }
    return Instance(inst.bound(), std::move(agents), std::move(lists));
}

auto delete_pairs(const Instance & inst, std::span<const std::pair<AgentId, AgentId>> pairs) -> Instance
{
    const auto stride = static_cast<std::size_t>(inst.bound()) + 1;
    std::vector<bool> gone(stride * stride, false);
    for (auto [a, b] : pairs) {
        gone[a * stride + b] = true;
        gone[b * stride + a] = true;
    }
    std::vector<AgentId> agents(inst.agents().begin(), inst.agents().end());
    std::vector<std::vector<AgentId>> lists;
    for (AgentId a : agents) {
        auto & list = lists.emplace_back();
        for (AgentId b : inst.prefs(a))
            if (!gone[a * stride + b])
                list.push_back(b);
    }
    return Instance(inst.bound(), std::move(agents), std::move(lists));
}

auto random_instance(int n, Seed seed) -> Instance
{
    if (n < 2)
        throw std::invalid_argument("random_instance needs n >= 2");
    std::vector<std::vector<AgentId>> prefs(n);
    for (AgentId a = 1; a <= n; ++a) {
        Rng rng(derive_seed(seed.value, static_cast<std::uint64_t>(a)));
        auto & list = prefs[a - 1];
        for (AgentId b = 1; b <= n; ++b)
            if (b != a)
                list.push_back(b);
        // Fisher-Yates, high to low.
        for (std::size_t k = list.size(); k > 1; --k)
            std::swap(list[k - 1], list[rng.below(k)]);
    }
    return Instance(std::move(prefs));
}

auto attach_gadget(const Instance & inst) -> Instance
{
    if (!inst.complete())
        throw std::invalid_argument("attach_gadget needs a complete instance");

    const int base = inst.bound();
    // Top three choices of b1..b6, as offsets 1..6.
    static constexpr int top[6][3] = {
        {4, 2, 3}, {4, 3, 1}, {5, 1, 2}, {3, 5, 6}, {1, 6, 4}, {1, 4, 5}};

    std::vector<AgentId> agents(inst.agents().begin(), inst.agents().end());
    std::vector<std::vector<AgentId>> lists;
    for (AgentId a : agents) {
        auto & list = lists.emplace_back(inst.prefs(a).begin(), inst.prefs(a).end());
        for (int g = 1; g <= 6; ++g)
            list.push_back(base + g);
    }
    for (int g = 1; g <= 6; ++g) {
        agents.push_back(base + g);
        auto & list = lists.emplace_back();
        std::vector<bool> used(7, false);
        used[g] = true;
        for (int t : top[g - 1]) {
            list.push_back(base + t);
            used[t] = true;
        }
        for (int h = 1; h <= 6; ++h)
            if (!used[h])
                list.push_back(base + h);
        for (AgentId a : inst.agents())
            list.push_back(a);
    }
    return Instance(base + 6, std::move(agents), std::move(lists));
}

} // namespace sr
