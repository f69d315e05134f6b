#include "corehook/core_poset.hpp"

#include "corehook/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace corehook {

Int floor_mod(Int a, Int b)
{
    const Int r = a % b;
    return r < 0 ? r + b : r;
}

Int mod_inverse(Int a, Int m)
{
    if (m < 1)
        throw InvalidInput("modulus must be >= 1");
    Int old_r = floor_mod(a, m), r = m;
    Int old_x = 1, x = 0;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_x = std::exchange(x, old_x - q * x);
    }
    if (old_r != 1 && m != 1)
        throw InvalidInput(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return floor_mod(old_x, m);
}

CoreParams::CoreParams(Int s, Int k) : s_(s), k_(k)
{
    if (s < 2)
        throw InvalidInput("s must be >= 2, got " + std::to_string(s));
    if (k < 1)
        throw InvalidInput("k = t - s must be >= 1, got " + std::to_string(k));
    if (s + k > kMaxGenerator)
        throw InvalidInput("t exceeds " + std::to_string(kMaxGenerator));
    if (std::gcd(s, k) != 1)
        throw InvalidInput("s and t must be coprime");
}

CoreParams CoreParams::from_generators(Int s, Int t)
{
    if (t <= s)
        throw InvalidInput("require s < t");
    return CoreParams(s, t - s);
}

bool is_representable(Int x, Int s, Int t)
{
    if (x < 0)
        return false;
    for (Int a = 0; a * s <= x; ++a)
        if ((x - a * s) % t == 0)
            return true;
    return false;
}

GapPoset::GapPoset(const CoreParams& params)
{
    const Int s = params.s(), t = params.t(), m = params.frobenius();
    // Sieve the semigroup on [0, M].
    std::vector<bool> representable(static_cast<std::size_t>(m + 1), false);
    representable[0] = true;
    for (Int x = 1; x <= m; ++x)
        representable[static_cast<std::size_t>(x)] =
            (x >= s && representable[static_cast<std::size_t>(x - s)]) ||
            (x >= t && representable[static_cast<std::size_t>(x - t)]);
    member_.assign(static_cast<std::size_t>(m + 1), false);
    for (Int x = 1; x <= m; ++x) {
        if (!representable[static_cast<std::size_t>(x)]) {
            elements_.push_back(x);
            member_[static_cast<std::size_t>(x)] = true;
        }
    }
}

bool GapPoset::contains(Int x) const noexcept
{
    return x >= 0 && x < static_cast<Int>(member_.size()) && member_[static_cast<std::size_t>(x)];
}

GapPoset gap_poset(const CoreParams& params)
{
    return GapPoset(params);
}

std::vector<Int> principal_ideal(Int x, const CoreParams& params)
{
    const Int s = params.s(), t = params.t();
    if (x <= 0 || is_representable(x, s, t))
        throw InvalidInput(std::to_string(x) + " is not a gap of <" + std::to_string(s) + "," +
                           std::to_string(t) + ">");
    std::vector<Int> out;
    for (Int a = 0; x - a * s > 0; ++a)
        for (Int y = x - a * s; y > 0; y -= t)
            out.push_back(y);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BottomEdge::BottomEdge(std::vector<Int> ordered, Int bound) : ordered_(std::move(ordered))
{
    position_.assign(static_cast<std::size_t>(bound + 1), -1);
    for (std::size_t i = 0; i < ordered_.size(); ++i)
        position_[static_cast<std::size_t>(ordered_[i])] = static_cast<std::ptrdiff_t>(i);
}

bool BottomEdge::contains(Int x) const noexcept
{
    return x >= 0 && x < static_cast<Int>(position_.size()) && position_[static_cast<std::size_t>(x)] >= 0;
}

std::size_t BottomEdge::position(Int x) const
{
    if (!contains(x))
        throw InvalidInput(std::to_string(x) + " is not on the bottom edge");
    return static_cast<std::size_t>(position_[static_cast<std::size_t>(x)]);
}

BottomEdge bottom_edge(const CoreParams& params)
{
    const Int s = params.s(), k = params.k(), t = params.t();
    std::vector<bool> in_edge(static_cast<std::size_t>(t), false);
    Int edge_size = 0;
    for (Int x = 1; x < t; ++x) {
        // Below t only multiples of s are representable.
        if (x % s != 0) {
            in_edge[static_cast<std::size_t>(x)] = true;
            ++edge_size;
        }
    }
    auto member = [&](Int x) { return x >= 1 && x < t && in_edge[static_cast<std::size_t>(x)]; };

    Int start = -1;
    for (Int x = 1; x < t; ++x) {
        if (member(x) && !member(x - s) && !member(x + k)) {
            if (start != -1)
                throw InvariantViolation("bottom edge has two minimal elements");
            start = x;
        }
    }
    if (start == -1)
        throw InvariantViolation("bottom edge has no minimal element");

    std::vector<Int> ordered{start};
    for (Int x = start; x != k;) {
        x = x < k ? x + s : x - k;
        if (!member(x) || static_cast<Int>(ordered.size()) >= edge_size)
            throw InvariantViolation("successor chain on the bottom edge left E or revisited an element");
        ordered.push_back(x);
    }
    if (static_cast<Int>(ordered.size()) != edge_size)
        throw InvariantViolation("successor chain on the bottom edge does not cover E");
    return BottomEdge(std::move(ordered), t - 1);
}

Int h_of(Int x, const CoreParams& params)
{
    return x / params.s() + 1;
}

Int g_of(Int x, const CoreParams& params)
{
    return x % params.s();
}

Ledge ledge(Int residue, const CoreParams& params)
{
    const Int k = params.k();
    if (residue < 0 || residue >= k)
        throw InvalidInput("ledge residue must lie in [0, k-1]");
    Ledge out{residue, {}};
    for (Int x = params.t() - 1; x >= 1; --x)
        if (x % k == residue && x % params.s() != 0)
            out.members.push_back(x);
    return out;
}

Int ledge_length_formula(Int i, const CoreParams& params)
{
    const Int s = params.s(), k = params.k(), s_bar = params.s_bar();
    if (i < 0 || i >= k)
        throw InvalidInput("ledge residue must lie in [0, k-1]");
    const Int q = (s - 1) / k;
    const Int wrap_residue = ((k + s - 1) / s) * s % k; // ceil(k/s)*s mod k

    if (i > 0 && i % s == 0)
        return 0;
    if (i == s_bar)
        return q;
    if (i == wrap_residue && k > s)
        return 1;
    if (i == 0 && k > 1)
        return q + 1;
    if (s_bar < i && i % s != 0)
        return q + 1;
    if (0 < i && i < s_bar && i != wrap_residue)
        return q + 2;
    throw InvariantViolation("ledge length cases are not exhaustive for i=" + std::to_string(i));
}

bool in_wrap_interval(Int x, Int a, Int b, Int k, Bound left, Bound right)
{
    if (k < 1)
        throw InvalidInput("modulus must be >= 1");
    const Int lo = floor_mod(a, k), hi = floor_mod(b, k), r = floor_mod(x, k);
    const bool left_ok = left == Bound::closed ? r >= lo : r > lo;
    const bool right_ok = right == Bound::closed ? r <= hi : r < hi;
    if (lo <= hi)
        return left_ok && right_ok;
    // (lo, k-1] ∪ [0, hi)
    return (left_ok && r <= k - 1) || (r >= 0 && right_ok);
}

std::vector<Int> wrap_interval(Int a, Int b, Int k, Bound left, Bound right)
{
    std::vector<Int> out;
    for (Int r = 0; r < k; ++r)
        if (in_wrap_interval(r, a, b, k, left, right))
            out.push_back(r);
    return out;
}

namespace {

void require_stilde_domain(const CoreParams& params, Int d)
{
    if (params.k() < 2)
        throw InvalidInput("s_tilde needs k >= 2");
    if (d < 1 || d >= params.k())
        throw InvalidInput("s_tilde needs 1 <= d < k");
}

} // namespace

Int s_tilde(const CoreParams& params, Int d)
{
    require_stilde_domain(params, d);
    const Int k = params.k();
    const Int inv = mod_inverse(params.s_bar(), k);
    Int best = std::numeric_limits<Int>::max();
    for (Int l = -d; l <= d; ++l)
        if (l != 0)
            best = std::min(best, floor_mod(l * inv, k));
    return best;
}

std::vector<Int> stilde_interval(Int i, const CoreParams& params, Int d)
{
    const Int st = s_tilde(params, d), k = params.k(), s_bar = params.s_bar();
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(st));
    for (Int j = 0; j < st; ++j)
        out.push_back(floor_mod(i + s_bar * j, k));
    return out;
}

Int stilde_interval_overlap(Int i, const CoreParams& params, Int d)
{
    const auto interval = stilde_interval(i, params, d);
    const Int s_bar = params.s_bar();
    const auto has = [&](Int r) { return std::find(interval.begin(), interval.end(), r) != interval.end(); };
    if (has(0) && has(s_bar))
        throw InvalidInput("s-tilde interval contains both 0 and s_bar");
    return std::count_if(interval.begin(), interval.end(), [&](Int r) { return r >= 1 && r <= s_bar - 1; });
}

Int stilde_interval_overlap_formula(Int i, const CoreParams& params, Int d)
{
    const Int k = params.k(), s_bar = params.s_bar();
    const Int product = s_bar * s_tilde(params, d);
    const Int ceil_avg = (product + k - 1) / k;
    if (in_wrap_interval(i, s_bar - product, s_bar, k, Bound::open, Bound::open))
        return ceil_avg;
    if (in_wrap_interval(i, s_bar, s_bar - product, k, Bound::closed, Bound::closed))
        return ceil_avg - 1;
    throw InvariantViolation("residue " + std::to_string(i) + " lies in neither branch");
}

IntervalIdeal edge_trace(Int x, const CoreParams& params, const BottomEdge& edge)
{
    IntervalIdeal out;
    for (Int y : principal_ideal(x, params))
        if (edge.contains(y))
            out.run.push_back(y);
    std::sort(out.run.begin(), out.run.end(),
              [&](Int a, Int b) { return edge.position(a) < edge.position(b); });
    return out;
}

bool is_interval_ideal(const std::vector<Int>& run, const CoreParams& params, const BottomEdge& edge)
{
    if (run.empty())
        return true;
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (!edge.contains(run[i]))
            return false;
        if (i > 0 && edge.position(run[i]) != edge.position(run[i - 1]) + 1)
            return false;
    }
    // Inside E only x - s can stay positive; x - t < 0.
    for (Int x : run)
        if (x > params.s() && std::find(run.begin(), run.end(), x - params.s()) == run.end())
            return false;
    return true;
}

} // namespace corehook
