#pragma once

#include "corehook/core_poset.hpp"
#include "corehook/partitions.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace corehook {

/// Which closed-form branch produced H. The first six are the coprime
/// branches; the SCALED_* tags are the four gcd >= 2 branches.
enum class CaseTag {
    k1_or_ks_le_d,             ///< k = 1, or k, s <= d: H = s - 1
    k_le_d_lt_s,               ///< 1 < k <= d < s: H = s + k - 1
    b_minus_2,                 ///< d < k, s̄s̃ mod k = 1
    b_minus_s_minus_1,         ///< 1 < s̄s̃ mod k <= d < k
    b_plus_k_minus_ss_minus_1, ///< d < s̄s̃ mod k < k - 1
    b_minus_1,                 ///< d < s̄s̃ mod k = k - 1
    scaled_k1_plus_2,          ///< k = 1, d < s: b(H + 2) - 1
    scaled_k1_plus_1,          ///< k = 1, d >= s: b(H + 1) - 1
    scaled_plus_2,             ///< d < k, s̄s̃ mod k = 1 or d < s̄s̃ mod k = k - 1
    scaled_plus_1,             ///< remaining k > 1 branches: b(H + 1) - 1
};

/// Stable string used in CLI output, e.g. "B_MINUS_2".
std::string_view case_tag_name(CaseTag tag);

struct MaxHookResult {
    Int s = 0;
    Int t = 0;
    Int d = 0;
    Int gcd = 1;
    Int H = 0;
    CaseTag case_tag = CaseTag::k1_or_ks_le_d;
    /// Branch taken on the reduced coprime problem when gcd >= 2.
    std::optional<CaseTag> reduced_case;
    // Present only when the coprime branch is one of the four B-cases
    // (for gcd >= 2: of the reduced problem).
    std::optional<Int> B;
    std::optional<Int> s_bar;
    std::optional<Int> s_tilde;
    /// Principal down-set {H - a*s - b*t > 0}; the inclusion-minimal maximiser.
    BetaSet witness_beta;
    Partition witness;
};

/// Maximum hook length of a d-distinct (s, s+k)-core for coprime s, k.
MaxHookResult max_hook_coprime(const CoreParams& params, Int d);

/// <H> ∩ E built from ledges, for d < k. Checks itself against the
/// closed form and against <H> ∩ E; throws InvariantViolation on mismatch.
IntervalIdeal best_interval_ideal(const CoreParams& params, Int d);

/// Any 2 <= s < t with gcd(s, t) <= d. Non-coprime input is reduced by
/// b = gcd(s, t) and d -> floor(d / b), then scaled back.
///
/// Throws InfiniteFamily if gcd(s, t) > d, Degenerate if s = t or s / gcd < 2,
/// InvalidInput for s > t, d < 1 or out-of-range generators.
MaxHookResult max_hook_general(Int s, Int t, Int d);

/// {x - a1*b*s - a2*b*t >= 0 : a1, a2 >= 0}. Unlike principal_ideal this
/// admits 0 and does not require x to be a gap.
struct GeneralizedIdeal {
    Int base = 0;
    Int scale = 1;
    std::vector<Int> members; ///< descending
};

GeneralizedIdeal generalized_ideal(Int x, Int s, Int t, Int b);

struct Witness {
    BetaSet beta;
    Partition partition;
};

/// A d-distinct (s,t)-core whose largest hook is the maximum possible.
Witness witness_core(Int s, Int t, Int d);

} // namespace corehook
