#pragma once

#include <sr/enumerate.hpp>
#include <sr/instance.hpp>
#include <sr/partition.hpp>
#include <sr/profile.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sr {

enum class Criterion { MinRegret, FirstChoice, RankMaximal, RegretMin, Generous, Egalitarian };

/// CLI names: min-regret | first-choice | rank-maximal | regret-min | generous | egalitarian.
auto criterion_name(Criterion c) -> std::string_view;
/// Throws std::invalid_argument on an unknown name.
auto parse_criterion(std::string_view name) -> Criterion;

/// Minimum regret, minimum count at the regret rank, and so on as the
/// criterion prescribes. Strict: equal profiles are not better.
auto better(Criterion c, const Profile & x, const Profile & y) -> bool;

/// True when the criterion's optimum is always attained by a reduced
/// partition, so the search can stay inside RP(I).
auto reduced_sufficient(Criterion c) -> bool;

struct Optimum {
    Partition partition;
    Profile profile;
};

/// Exact optimum by enumeration. Ties go to the smallest partition in
/// canonical order. Throws BudgetExceeded when the full search runs out.
auto optimal_partition(const Instance & inst, Criterion c, Budget * budget = nullptr) -> Optimum;

/// A reduced stable partition of least regret.
auto min_regret_partition(const Instance & inst) -> Partition;

struct ThresholdQuery {
    enum class Kind { FC, Rank, RM, Gen, Egal };
    Kind kind = Kind::FC;
    long long k = 0;
    std::vector<int> sigma;

    auto to_string() const -> std::string;
};

/// "fc:K", "rank:v1,v2,...", "rm:K", "gen:v1,v2,...", "egal:K".
/// Throws std::invalid_argument on malformed text or negative K.
auto parse_query(std::string_view text) -> ThresholdQuery;

/// A witness on yes, nullopt on no. Throws std::invalid_argument when sigma
/// does not have one entry per agent.
auto decide(const Instance & inst, const ThresholdQuery & q, Budget * budget = nullptr) -> std::optional<Partition>;

/// Relations between partition profiles and matching profiles on a solvable
/// instance.
struct BridgeReport {
    /// Every stable matching: partition combined profile = 2 x matching profile.
    bool doubled_profiles = true;
    int max_first_partitions = 0;
    int max_first_matchings = 0;
    long long min_cost2_partitions = 0;
    long long min_cost2_matchings = 0;

    auto holds() const -> bool
    {
        return doubled_profiles && max_first_partitions == 2 * max_first_matchings
                && min_cost2_partitions == min_cost2_matchings;
    }
};

/// Throws std::invalid_argument on an unsolvable instance.
auto stable_matching_profile_bridge(const Instance & inst, Budget * budget = nullptr) -> BridgeReport;

} // namespace sr
