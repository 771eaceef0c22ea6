#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sr {

/// 1-based agent index. Zero is never a valid agent.
using AgentId = int;

/// Seed for the random instance generator.
struct Seed {
    std::uint64_t value = 0;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { Malformed, SelfPreference, Duplicate, NotMutual, OutOfRange };

    ParseError(Kind kind, int line, const std::string & what);

    auto kind() const noexcept -> Kind { return kind_; }
    auto line() const noexcept -> int { return line_; }

private:
    Kind kind_;
    int line_;
};

/// A Stable Roommates instance over a (not necessarily contiguous) set of
/// agent indices in [1, bound]. Preference lists are strict and most-preferred
/// first; acceptability is always mutual. Immutable once built.
class Instance {
public:
    Instance() = default;

    /// Builds an instance over agents 1..prefs.size(). Throws
    /// std::invalid_argument on self-preference, duplicates, out-of-range
    /// entries or non-mutual acceptability.
    explicit Instance(std::vector<std::vector<AgentId>> prefs);

    /// Builds an instance over an explicit agent subset of [1, bound].
    /// `lists[k]` is the list of `agents[k]`.
    Instance(int bound, std::vector<AgentId> agents, std::vector<std::vector<AgentId>> lists);

    /// Number of agents present.
    auto size() const noexcept -> int { return static_cast<int>(agents_.size()); }
    /// Largest usable agent index; agents are a subset of [1, bound()].
    auto bound() const noexcept -> int { return bound_; }
    auto agents() const noexcept -> std::span<const AgentId> { return agents_; }
    auto contains(AgentId a) const noexcept -> bool
    {
        return a >= 1 && a <= bound_ && present_[a];
    }

    auto prefs(AgentId a) const -> std::span<const AgentId> { return prefs_.at(a); }

    /// 1-based rank of j in i's list, or nullopt if j is unacceptable to i.
    /// Throws std::invalid_argument when i == j.
    auto rank(AgentId i, AgentId j) const -> std::optional<int>;

    /// Rank without the i != j check: 0 when unacceptable.
    auto raw_rank(AgentId i, AgentId j) const noexcept -> int
    {
        return rank_[static_cast<std::size_t>(i) * (bound_ + 1) + j];
    }

    auto acceptable(AgentId i, AgentId j) const noexcept -> bool { return i != j && raw_rank(i, j) != 0; }

    /// True iff i strictly prefers j to k. `i` itself stands for "self", which
    /// ranks below every acceptable agent; unacceptable agents rank below self.
    auto prefers(AgentId i, AgentId j, AgentId k) const noexcept -> bool
    {
        return position(i, j) < position(i, k);
    }

    /// Comparable position of j in i's list: rank if acceptable, list length + 1
    /// for self, and a value beyond that for unacceptable agents.
    auto position(AgentId i, AgentId j) const noexcept -> int
    {
        if (i == j)
            return static_cast<int>(prefs_[i].size()) + 1;
        int r = raw_rank(i, j);
        return r == 0 ? static_cast<int>(prefs_[i].size()) + 2 : r;
    }

    /// Every list has length size() - 1.
    auto complete() const noexcept -> bool;

    auto operator==(const Instance & other) const -> bool
    {
        return bound_ == other.bound_ && agents_ == other.agents_ && prefs_ == other.prefs_;
    }

private:
    void build();

    int bound_ = 0;
    std::vector<AgentId> agents_;
    std::vector<bool> present_;
    std::vector<std::vector<AgentId>> prefs_;
    std::vector<int> rank_;
};

auto parse_instance(std::istream & in) -> Instance;
auto parse_instance(const std::string & text) -> Instance;
auto read_instance_file(const std::string & path) -> Instance;

void write_instance(std::ostream & out, const Instance & inst);
auto serialize_instance(const Instance & inst) -> std::string;

/// Keeps the agents in `keep` (ids outside the instance are ignored) with
/// their preference order preserved.
auto restrict(const Instance & inst, std::span<const AgentId> keep) -> Instance;

/// Removes the listed pairs from both agents' lists.
auto delete_pairs(const Instance & inst, std::span<const std::pair<AgentId, AgentId>> pairs) -> Instance;

/// Complete instance with uniformly random lists. Deterministic per (n, seed).
auto random_instance(int n, Seed seed) -> Instance;

/// Appends two forced 3-cycles b1..b6 (ids n+1..n+6) to a complete instance.
auto attach_gadget(const Instance & inst) -> Instance;

} // namespace sr
