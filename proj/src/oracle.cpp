#include "corehook/oracle.hpp"

#include "corehook/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace corehook {

namespace {

constexpr Int kMaxScan = 1'000'000;

void validate(Int s, Int t, Int d)
{
    if (s < 1 || t <= s)
        throw InvalidInput("oracle requires 1 <= s < t");
    if (d < 0)
        throw InvalidInput("d must be >= 0");
    if (s * t > kMaxScan)
        throw InvalidInput("s*t exceeds the oracle scan limit " + std::to_string(kMaxScan));
    // With d = 0 the only finite families are the coprime ones.
    if (std::gcd(s, t) > std::max<Int>(d, 1))
        throw InfiniteFamily("infinite family: gcd(s,t) > d");
}

/// Sieve of the semigroup <s, t> on [0, cap].
std::vector<bool> representable_table(Int s, Int t, Int cap)
{
    std::vector<bool> rep(static_cast<std::size_t>(cap + 1), false);
    rep[0] = true;
    for (Int x = 1; x <= cap; ++x)
        rep[static_cast<std::size_t>(x)] = (x >= s && rep[static_cast<std::size_t>(x - s)]) ||
                                           (x >= t && rep[static_cast<std::size_t>(x - t)]);
    return rep;
}

std::vector<Int> positive_down_set(Int x, Int s, Int t)
{
    std::vector<Int> out;
    for (Int y = x; y > 0; y -= s)
        for (Int z = y; z > 0; z -= t)
            out.push_back(z);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool gaps_exceed(const std::vector<Int>& descending, Int d)
{
    for (std::size_t i = 1; i < descending.size(); ++i)
        if (descending[i - 1] - descending[i] <= d)
            return false;
    return true;
}

// Depth-first generation of closed, d-distinct sets. Elements are chosen
// in decreasing order; `pending` holds the elements still owed by the
// closure condition, and the next choice may never skip the largest of them.
template <typename Visit>
void for_each_core(Int s, Int t, Int d, Visit&& visit)
{
    const Int cap = s * t;
    const auto rep = representable_table(s, t, cap);
    std::vector<Int> candidates; // descending
    for (Int x = cap; x >= 1; --x)
        if (!rep[static_cast<std::size_t>(x)])
            candidates.push_back(x);

    std::vector<Int> chosen;
    std::vector<Int> pending; // kept sorted descending, no duplicates

    const auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (pending.empty())
            visit(chosen);
        const Int must_reach = pending.empty() ? 0 : pending.front();
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const Int y = candidates[i];
            if (!chosen.empty() && chosen.back() - y <= d)
                continue;
            if (y < must_reach)
                break;

            const auto saved = pending;
            std::erase(pending, y);
            for (Int u : {s, t})
                if (y - u > 0 && std::find(pending.begin(), pending.end(), y - u) == pending.end())
                    pending.push_back(y - u);
            std::sort(pending.begin(), pending.end(), std::greater<>());

            chosen.push_back(y);
            self(self, i + 1);
            chosen.pop_back();
            pending = saved;
        }
    };
    recurse(recurse, 0);
}

} // namespace

bool is_valid_core_beta(const BetaSet& beta, Int s, Int t)
{
    for (Int x : beta.elements())
        for (Int u : {s, t})
            if (x >= u && (x - u <= 0 || !beta.contains(x - u)))
                return false;
    return true;
}

OracleReport oracle_max_hook(Int s, Int t, Int d)
{
    validate(s, t, d);
    OracleReport report;
    report.scanned_up_to = s * t;
    const auto rep = representable_table(s, t, report.scanned_up_to);

    for (Int x = report.scanned_up_to; x >= 1; --x) {
        if (rep[static_cast<std::size_t>(x)])
            continue;
        auto members = positive_down_set(x, s, t);
        if (!gaps_exceed(members, d))
            continue;
        BetaSet beta(std::move(members));
        if (!is_valid_core_beta(beta, s, t))
            continue;
        // A maximising core has max hook far below s*t; a hit in the top tenth
        // means the cap argument is broken.
        if (10 * x > 9 * report.scanned_up_to)
            throw InvariantViolation("oracle found a passing x in the top 10% of the scan range");
        report.H_true = x;
        report.witnesses.push_back(std::move(beta));
        break;
    }
    return report;
}

std::vector<BetaSet> enumerate_d_distinct_cores(Int s, Int t, Int d)
{
    validate(s, t, d);
    std::vector<std::vector<Int>> found;
    for_each_core(s, t, d, [&](const std::vector<Int>& chosen) { found.push_back(chosen); });
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<BetaSet> out;
    out.reserve(found.size());
    for (auto& f : found)
        out.emplace_back(std::move(f));
    return out;
}

std::uint64_t count_core_ideals(Int s, Int t)
{
    if (s < 1 || t <= s)
        throw InvalidInput("count_core_ideals requires 1 <= s < t");
    if (std::gcd(s, t) != 1)
        throw InvalidInput("count_core_ideals requires coprime s, t");
    validate(s, t, 0);
    std::uint64_t count = 0;
    for_each_core(s, t, 0, [&](const std::vector<Int>&) { ++count; });
    return count;
}

} // namespace corehook
