#include <sr/optimal.hpp>

#include <sr/matching.hpp>

#include <charconv>
#include <stdexcept>

namespace sr {

namespace {

constexpr std::string_view names[] = {
        "min-regret", "first-choice", "rank-maximal", "regret-min", "generous", "egalitarian"};

auto parse_number(std::string_view text) -> long long
{
    long long v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty())
        throw std::invalid_argument("bad number '" + std::string(text) + "'");
    if (v < 0)
        throw std::invalid_argument("threshold must be non-negative");
    return v;
}

auto parse_vector(std::string_view text) -> std::vector<int>
{
    std::vector<int> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(static_cast<int>(parse_number(text.substr(0, comma))));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void check_sigma(const Instance & inst, const ThresholdQuery & q)
{
    if (static_cast<int>(q.sigma.size()) != inst.size())
        throw std::invalid_argument("profile threshold has " + std::to_string(q.sigma.size()) + " entries, expected "
                + std::to_string(inst.size()));
}

} // namespace

auto criterion_name(Criterion c) -> std::string_view
{
    return names[static_cast<int>(c)];
}

auto parse_criterion(std::string_view name) -> Criterion
{
    for (int k = 0; k < 6; ++k)
        if (names[k] == name)
            return static_cast<Criterion>(k);
    throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

auto better(Criterion c, const Profile & x, const Profile & y) -> bool
{
    switch (c) {
    case Criterion::MinRegret:
        return x.regret < y.regret;
    case Criterion::FirstChoice:
        return x.first_choices() > y.first_choices();
    case Criterion::RankMaximal:
        return compare_profiles(x.combined, y.combined) > 0;
    case Criterion::RegretMin:
        return x.regret < y.regret || (x.regret == y.regret && x.at(x.regret) < y.at(y.regret));
    case Criterion::Generous:
        return compare_profiles(x.combined, y.combined, Order::Reverse) < 0;
    case Criterion::Egalitarian:
        return x.cost2 < y.cost2;
    }
    return false;
}

auto reduced_sufficient(Criterion c) -> bool
{
    return c != Criterion::RankMaximal && c != Criterion::Generous;
}

auto optimal_partition(const Instance & inst, Criterion c, Budget * budget) -> Optimum
{
    std::optional<Optimum> best;
    auto consider = [&](const Partition & p) {
        Profile pr = profile(inst, p);
        if (!best || better(c, pr, best->profile)
                || (!better(c, best->profile, pr) && p < best->partition))
            best = Optimum{p, std::move(pr)};
    };
    if (reduced_sufficient(c))
        for (const auto & p : enumerate_reduced_partitions(inst))
            consider(p);
    else
        for_each_partition(inst, consider, budget);
    if (!best)
        throw std::logic_error("instance without a stable partition");
    return std::move(*best);
}

auto min_regret_partition(const Instance & inst) -> Partition
{
    return optimal_partition(inst, Criterion::MinRegret).partition;
}

auto ThresholdQuery::to_string() const -> std::string
{
    static constexpr std::string_view tags[] = {"fc", "rank", "rm", "gen", "egal"};
    std::string out(tags[static_cast<int>(kind)]);
    out += ':';
    if (kind == Kind::Rank || kind == Kind::Gen) {
        for (std::size_t k = 0; k < sigma.size(); ++k)
            out += (k ? "," : "") + std::to_string(sigma[k]);
    } else {
        out += std::to_string(this->k);
    }
    return out;
}

auto parse_query(std::string_view text) -> ThresholdQuery
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("query must look like kind:value");
    auto tag = text.substr(0, colon);
    auto value = text.substr(colon + 1);
    ThresholdQuery q;
    if (tag == "fc")
        q.kind = ThresholdQuery::Kind::FC;
    else if (tag == "rank")
        q.kind = ThresholdQuery::Kind::Rank;
    else if (tag == "rm")
        q.kind = ThresholdQuery::Kind::RM;
    else if (tag == "gen")
        q.kind = ThresholdQuery::Kind::Gen;
    else if (tag == "egal")
        q.kind = ThresholdQuery::Kind::Egal;
    else
        throw std::invalid_argument("unknown query kind '" + std::string(tag) + "'");
    if (q.kind == ThresholdQuery::Kind::Rank || q.kind == ThresholdQuery::Kind::Gen)
        q.sigma = parse_vector(value);
    else
        q.k = parse_number(value);
    return q;
}

auto decide(const Instance & inst, const ThresholdQuery & q, Budget * budget) -> std::optional<Partition>
{
    // Each predicate is monotone in the criterion's order, so the optimum is
    // a witness whenever one exists.
    using K = ThresholdQuery::Kind;
    Optimum opt;
    bool yes = false;
    switch (q.kind) {
    case K::FC:
        opt = optimal_partition(inst, Criterion::FirstChoice, budget);
        yes = opt.profile.first_choices() >= q.k;
        break;
    case K::Rank:
        check_sigma(inst, q);
        opt = optimal_partition(inst, Criterion::RankMaximal, budget);
        yes = compare_profiles(opt.profile.combined, q.sigma) >= 0;
        break;
    case K::RM:
        opt = optimal_partition(inst, Criterion::RegretMin, budget);
        yes = opt.profile.at(opt.profile.regret) <= q.k;
        break;
    case K::Gen:
        check_sigma(inst, q);
        opt = optimal_partition(inst, Criterion::Generous, budget);
        yes = compare_profiles(opt.profile.combined, q.sigma, Order::Reverse) <= 0;
        break;
    case K::Egal:
        opt = optimal_partition(inst, Criterion::Egalitarian, budget);
        yes = opt.profile.cost2 <= 2 * q.k;
        break;
    }
    if (!yes)
        return std::nullopt;
    return opt.partition;
}

auto stable_matching_profile_bridge(const Instance & inst, Budget * budget) -> BridgeReport
{
    auto matchings = all_stable_matchings(inst);
    if (matchings.empty())
        throw std::invalid_argument("instance admits no stable matching");
    BridgeReport r;
    bool first = true;
    for (const auto & m : matchings) {
        Profile pm = matching_profile(inst, m);
        Profile pp = profile(inst, matching_to_partition(m));
        for (std::size_t k = 0; k < pm.combined.size(); ++k)
            if (pp.combined[k] != 2 * pm.combined[k])
                r.doubled_profiles = false;
        if (first || pm.first_choices() > r.max_first_matchings)
            r.max_first_matchings = pm.first_choices();
        if (first || pm.cost2 < r.min_cost2_matchings)
            r.min_cost2_matchings = pm.cost2;
        first = false;
    }
    first = true;
    for_each_partition(
            inst,
            [&](const Partition & p) {
                Profile pp = profile(inst, p);
                if (first || pp.first_choices() > r.max_first_partitions)
                    r.max_first_partitions = pp.first_choices();
                if (first || pp.cost2 < r.min_cost2_partitions)
                    r.min_cost2_partitions = pp.cost2;
                first = false;
            },
            budget);
    return r;
}

} // namespace sr
