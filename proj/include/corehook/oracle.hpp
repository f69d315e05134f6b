#pragma once

// Brute-force ground truth for the closed forms. Nothing here depends on
// core_poset or maxhook; only the partition-level predicates are shared.

#include "corehook/partitions.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace corehook {

struct OracleReport {
    std::optional<Int> H_true;      ///< absent when no nonempty core qualifies
    std::vector<BetaSet> witnesses; ///< minimal core(s) attaining H_true
    Int scanned_up_to = 0;          ///< scan cap s*t
    bool finite = true;
};

/// Closure under subtracting s and t: x >= u implies x - u > 0 and x - u in X.
bool is_valid_core_beta(const BetaSet& beta, Int s, Int t);

/// Scans x = s*t, s*t - 1, ..., 1 and returns the first x whose positive
/// down-set is a valid, d-distinct β-set.
/// Throws InfiniteFamily when gcd(s, t) > d; InvalidInput unless 1 <= s < t.
OracleReport oracle_max_hook(Int s, Int t, Int d);

/// Every d-distinct (s,t)-core β-set (the empty one included), ordered
/// lexicographically by descending element lists. d = 0 is accepted for
/// coprime s, t.
std::vector<BetaSet> enumerate_d_distinct_cores(Int s, Int t, Int d);

/// Number of (s,t)-cores for coprime s, t, counted without materialising them.
std::uint64_t count_core_ideals(Int s, Int t);

} // namespace corehook
