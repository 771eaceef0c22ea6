#pragma once

#include <sr/instance.hpp>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sr {

/// Ordered cycle of distinct agents, stored rotated so the smallest agent
/// comes first. Orientation is significant: (1 2 3) differs from (1 3 2).
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<AgentId> agents);

    auto size() const noexcept -> int { return static_cast<int>(agents_.size()); }
    auto agents() const noexcept -> const std::vector<AgentId> & { return agents_; }
    auto operator[](int k) const -> AgentId { return agents_[k]; }
    auto begin() const { return agents_.begin(); }
    auto end() const { return agents_.end(); }
    auto front() const -> AgentId { return agents_.front(); }

    auto contains(AgentId a) const -> bool;
    /// Next agent cyclically. Throws if `a` is not on the cycle.
    auto successor(AgentId a) const -> AgentId;
    auto predecessor(AgentId a) const -> AgentId;

    auto is_transposition() const noexcept -> bool { return size() == 2; }
    auto is_odd() const noexcept -> bool { return size() % 2 == 1; }
    auto is_even_long() const noexcept -> bool { return size() >= 4 && size() % 2 == 0; }

    auto to_string() const -> std::string;

    auto operator==(const Cycle &) const -> bool = default;
    auto operator<=>(const Cycle &) const = default;

private:
    auto index_of(AgentId a) const -> int;

    std::vector<AgentId> agents_;
};

/// Disjoint collection of cycles in canonical order (sorted by first agent).
/// Carries successor and predecessor lookups for every covered agent.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument when cycles overlap or are empty.
    explicit Partition(std::vector<Cycle> cycles);

    auto cycles() const noexcept -> const std::vector<Cycle> & { return cycles_; }
    auto agents() const -> std::vector<AgentId>;
    auto covers(AgentId a) const noexcept -> bool
    {
        return a >= 1 && a < static_cast<int>(succ_.size()) && succ_[a] != 0;
    }
    auto successor(AgentId a) const -> AgentId;
    auto predecessor(AgentId a) const -> AgentId;
    /// The cycle through `a`. Throws if uncovered.
    auto cycle_of(AgentId a) const -> const Cycle &;

    /// Only transpositions and odd cycles.
    auto reduced() const -> bool;

    auto to_string() const -> std::string;

    auto operator==(const Partition & o) const -> bool { return cycles_ == o.cycles_; }
    auto operator<=>(const Partition & o) const { return cycles_ <=> o.cycles_; }

private:
    std::vector<Cycle> cycles_;
    std::vector<AgentId> succ_;
    std::vector<AgentId> pred_;
    std::vector<int> owner_;
};

auto parse_cycle(const std::string & text) -> Cycle;
/// Accepts "(1 2 3)(4 5 6)" with arbitrary whitespace.
auto parse_partition(const std::string & text) -> Partition;

using Pair = std::pair<AgentId, AgentId>;

/// Sorted set of disjoint pairs, each stored as (smaller, larger).
class Matching {
public:
    Matching() = default;
    /// Throws std::invalid_argument on overlapping pairs or a self pair.
    explicit Matching(std::vector<Pair> pairs);

    auto pairs() const noexcept -> const std::vector<Pair> & { return pairs_; }
    auto size() const noexcept -> int { return static_cast<int>(pairs_.size()); }
    /// Partner of `a`, or 0 when unmatched.
    auto partner(AgentId a) const -> AgentId;
    auto to_string() const -> std::string;

    auto operator==(const Matching &) const -> bool = default;
    auto operator<=>(const Matching &) const = default;

private:
    std::vector<Pair> pairs_;
};

struct Violation {
    enum class Kind { NotPermutation, T1, T2 };
    Kind kind;
    AgentId first = 0;
    AgentId second = 0;

    auto to_string() const -> std::string;
    auto operator==(const Violation &) const -> bool = default;
};

/// Stability of `p` as a partition of `inst`. Returns the first violation in
/// a fixed scan order: permutation check, then T1 by ascending agent, then T2
/// over pairs (i, j), i < j, lexicographically. Self ranks below every
/// acceptable agent; unacceptable agents rank below self.
auto verify_partition(const Instance & inst, const Partition & p) -> std::optional<Violation>;

/// Blocking pairs of `m` in `inst`, sorted. Empty means stable. Throws
/// std::invalid_argument if a pair is unacceptable or names an unknown agent.
auto verify_matching(const Instance & inst, const Matching & m) -> std::vector<Pair>;

struct CycleDecomposition {
    std::vector<Cycle> transpositions;
    std::vector<Cycle> evens;
    std::vector<Cycle> odds;
    int n1 = 0;
    int n2 = 0;
};

auto decompose(const Partition & p) -> CycleDecomposition;

/// Splits an even cycle (c0 c1 ... c_{2k-1}) into (c0 c1)(c2 c3)... and
/// (c0 c_{2k-1})(c1 c2).... Throws for odd or length-2 cycles.
auto break_even_cycle(const Cycle & c) -> std::pair<std::vector<Cycle>, std::vector<Cycle>>;

/// Breaks every even cycle of `p` the first way and the second way.
auto reduce(const Partition & p) -> std::pair<Partition, Partition>;

struct MergeResult {
    std::optional<Partition> partition;
    std::optional<Violation> violation;
    explicit operator bool() const noexcept { return partition.has_value(); }
};

/// Joins two reduced partitions: shared cycles are kept, the rest alternate
/// into even cycles oriented so the first agent of each cycle satisfies T1.
/// Fails with the violation when the result is not stable. Throws
/// std::invalid_argument when an input is not reduced, the agent sets differ,
/// or the odd cycles differ.
auto merge(const Instance & inst, const Partition & pa, const Partition & pb) -> MergeResult;

auto matching_to_partition(const Matching & m) -> Partition;
/// Like the above, adding a 1-cycle for every agent of `inst` left unmatched.
auto matching_to_partition(const Instance & inst, const Matching & m) -> Partition;
/// Throws std::invalid_argument if any cycle is not a transposition.
auto partition_to_matching(const Partition & p) -> Matching;

} // namespace sr
