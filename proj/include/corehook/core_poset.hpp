#pragma once

// The gap poset of the numerical semigroup <s, s+k> for coprime s and k,
// its bottom edge E = P ∩ [s+k-1] with the total order <_E, and the
// residue-class machinery (ledges, s̄, s̃) used to locate the best
// interval ideal.

#include "corehook/partitions.hpp"

#include <cstddef>
#include <vector>

namespace corehook {

/// Upper bound accepted for s and t anywhere in the library.
inline constexpr Int kMaxGenerator = 1'000'000;

/// a mod b in [0, b) for b > 0, for any sign of a.
Int floor_mod(Int a, Int b);

/// Inverse of a modulo m via extended Euclid. Throws InvalidInput when
/// gcd(a, m) != 1 or m < 1.
Int mod_inverse(Int a, Int m);

/// Validated coprime pair (s, t = s + k) with the derived quantities.
class CoreParams {
public:
    /// Throws InvalidInput unless s >= 2, k >= 1, gcd(s, k) = 1 and t <= kMaxGenerator.
    CoreParams(Int s, Int k);

    /// Same validation, from the generators themselves (requires s < t).
    static CoreParams from_generators(Int s, Int t);

    Int s() const noexcept { return s_; }
    Int k() const noexcept { return k_; }
    Int t() const noexcept { return s_ + k_; }
    /// s mod k. Equals s when k > s.
    Int s_bar() const noexcept { return s_ % k_; }
    /// Largest gap, st - s - t.
    Int frobenius() const noexcept { return s_ * t() - s_ - t(); }

    bool operator==(const CoreParams&) const = default;

private:
    Int s_;
    Int k_;
};

/// x = a*s + b*t for some a, b >= 0. Zero is representable.
bool is_representable(Int x, Int s, Int t);

/// Gaps of <s, t>, sorted ascending; max is the Frobenius element.
class GapPoset {
public:
    explicit GapPoset(const CoreParams& params);

    const std::vector<Int>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(Int x) const noexcept;
    Int max() const noexcept { return elements_.back(); }

private:
    std::vector<Int> elements_;
    std::vector<bool> member_;
};

GapPoset gap_poset(const CoreParams& params);

/// Principal order ideal <x> = {x - a*s - b*t > 0}, sorted descending.
/// Throws InvalidInput if x is not a gap.
std::vector<Int> principal_ideal(Int x, const CoreParams& params);

/// E listed in its total order. The last entry is always k.
class BottomEdge {
public:
    BottomEdge(std::vector<Int> ordered, Int bound);

    const std::vector<Int>& ordered() const noexcept { return ordered_; }
    std::size_t size() const noexcept { return ordered_.size(); }
    bool contains(Int x) const noexcept;
    /// Index of x in the order. Requires contains(x).
    std::size_t position(Int x) const;

private:
    std::vector<Int> ordered_;
    std::vector<std::ptrdiff_t> position_;
};

/// Builds E by following the cover relation from its unique minimum:
/// x -> x + s while x < k, x -> x - k while x > k, ending at k.
/// Throws InvariantViolation if the chain misses part of E.
BottomEdge bottom_edge(const CoreParams& params);

/// floor(x / s) + 1, the number of elements of <x> on the bottom edge.
Int h_of(Int x, const CoreParams& params);
/// x mod s, the first element of <x> ∩ E.
Int g_of(Int x, const CoreParams& params);

/// Elements of E congruent to `residue` mod k, in <_E order
/// (numerically descending; the first one may be >= s).
struct Ledge {
    Int residue = 0;
    std::vector<Int> members;
};

Ledge ledge(Int residue, const CoreParams& params);

/// Closed-form ledge size, evaluated case by case in the order the
/// closed form lists them.
Int ledge_length_formula(Int residue, const CoreParams& params);

enum class Bound { open, closed };

/// Residues mod k between a and b, wrapping through k-1 -> 0 when
/// a mod k > b mod k. Returned ascending.
std::vector<Int> wrap_interval(Int a, Int b, Int k, Bound left, Bound right);
bool in_wrap_interval(Int x, Int a, Int b, Int k, Bound left, Bound right);

/// min over 0 < |l| <= d of (l * s̄^{-1}) mod k.
/// Requires k >= 2 and 1 <= d < k.
Int s_tilde(const CoreParams& params, Int d);

/// (i, i + s̄, ..., i + s̄(s̃ - 1)) mod k.
std::vector<Int> stilde_interval(Int i, const CoreParams& params, Int d);

/// |I_i ∩ [s̄ - 1]| by enumeration. Throws InvalidInput when I_i holds both 0 and s̄.
Int stilde_interval_overlap(Int i, const CoreParams& params, Int d);

/// The same count from the two-branch closed form:
/// ceil(s̄s̃/k) on (s̄ - s̄s̃, s̄)_k, one less on [s̄, s̄ - s̄s̃]_k.
Int stilde_interval_overlap_formula(Int i, const CoreParams& params, Int d);

/// Contiguous run of the bottom edge that is also an order ideal of P.
struct IntervalIdeal {
    std::vector<Int> run; ///< in <_E order

    Int first() const { return run.front(); }
    std::size_t size() const noexcept { return run.size(); }
    bool operator==(const IntervalIdeal&) const = default;
};

/// <x> ∩ E in <_E order.
IntervalIdeal edge_trace(Int x, const CoreParams& params, const BottomEdge& edge);

/// True when `run` is consecutive in <_E and downward closed in P.
bool is_interval_ideal(const std::vector<Int>& run, const CoreParams& params, const BottomEdge& edge);

} // namespace corehook
