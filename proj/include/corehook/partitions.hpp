#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace corehook {

using Int = std::int64_t;

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is allowed.
class Partition {
public:
    Partition() = default;

    /// Throws InvalidInput if a part is < 1 or the parts increase somewhere.
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Sum of the parts.
    Int size() const noexcept;

    bool operator==(const Partition&) const = default;

private:
    std::vector<Int> parts_;
};

/// Finite set of distinct positive integers, kept sorted descending.
/// β-sets never contain 0.
class BetaSet {
public:
    BetaSet() = default;

    /// Elements may be given in any order. Throws InvalidInput on
    /// duplicates or non-positive values.
    explicit BetaSet(std::vector<Int> elements);

    const std::vector<Int>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(Int x) const noexcept;

    /// Largest element; absent for the empty set.
    std::optional<Int> max() const noexcept;

    bool operator==(const BetaSet&) const = default;

private:
    std::vector<Int> elements_;
};

/// Ragged matrix of hook lengths; row i has parts[i] entries.
using HookGrid = std::vector<std::vector<Int>>;

HookGrid hook_length_grid(const Partition& p);

/// {parts[i] + n - 1 - i}: the first-column hook lengths.
BetaSet beta_set(const Partition& p);

/// Inverse of beta_set.
Partition partition_from_beta(const BetaSet& beta);

/// Largest hook length, parts[0] + n - 1. Absent for the empty partition.
std::optional<Int> max_hook(const Partition& p);

// s-core test through the β-set: every x >= s has x - s in the set (and x != s).
bool is_s_core(const BetaSet& beta, Int s);
bool is_s_core(const Partition& p, Int s);
bool is_st_core(const Partition& p, Int s, Int t);

// Distinct β-elements differ by more than d.
bool is_d_distinct(const BetaSet& beta, Int d);
/// Consecutive parts differ by at least d. Any partition is 0-distinct.
bool is_d_distinct(const Partition& p, Int d);

} // namespace corehook
