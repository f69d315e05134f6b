#include "corehook/partitions.hpp"

#include "corehook/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace corehook {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidInput("partition parts must be positive, got " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
}

Int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

BetaSet::BetaSet(std::vector<Int> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end(), std::greater<>());
    if (!elements_.empty() && elements_.back() < 1)
        throw InvalidInput("beta-set elements must be positive, got " + std::to_string(elements_.back()));
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw InvalidInput("beta-set elements must be distinct");
}

bool BetaSet::contains(Int x) const noexcept
{
    return std::binary_search(elements_.begin(), elements_.end(), x, std::greater<>());
}

std::optional<Int> BetaSet::max() const noexcept
{
    if (elements_.empty())
        return std::nullopt;
    return elements_.front();
}

HookGrid hook_length_grid(const Partition& p)
{
    const auto& parts = p.parts();
    const auto n = parts.size();
    HookGrid grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i].resize(static_cast<std::size_t>(parts[i]));
        for (Int j = 0; j < parts[i]; ++j) {
            // Rows below i reaching column j form the leg.
            Int leg = 0;
            for (std::size_t r = i + 1; r < n && parts[r] > j; ++r)
                ++leg;
            grid[i][static_cast<std::size_t>(j)] = (parts[i] - j - 1) + leg + 1;
        }
    }
    return grid;
}

BetaSet beta_set(const Partition& p)
{
    const auto& parts = p.parts();
    const auto n = static_cast<Int>(parts.size());
    std::vector<Int> out;
    out.reserve(parts.size());
    for (Int i = 0; i < n; ++i)
        out.push_back(parts[static_cast<std::size_t>(i)] + n - 1 - i);
    return BetaSet(std::move(out));
}

Partition partition_from_beta(const BetaSet& beta)
{
    const auto& xs = beta.elements();
    const auto n = static_cast<Int>(xs.size());
    std::vector<Int> parts;
    parts.reserve(xs.size());
    for (Int i = 0; i < n; ++i)
        parts.push_back(xs[static_cast<std::size_t>(i)] - (n - 1 - i));
    return Partition(std::move(parts));
}

std::optional<Int> max_hook(const Partition& p)
{
    if (p.empty())
        return std::nullopt;
    return p.parts().front() + static_cast<Int>(p.length()) - 1;
}

bool is_s_core(const BetaSet& beta, Int s)
{
    if (s < 1)
        throw InvalidInput("s must be >= 1");
    return std::all_of(beta.elements().begin(), beta.elements().end(), [&](Int x) {
        return x < s || (x > s && beta.contains(x - s));
    });
}

bool is_s_core(const Partition& p, Int s)
{
    return is_s_core(beta_set(p), s);
}

bool is_st_core(const Partition& p, Int s, Int t)
{
    const auto beta = beta_set(p);
    return is_s_core(beta, s) && is_s_core(beta, t);
}

bool is_d_distinct(const BetaSet& beta, Int d)
{
    if (d < 0)
        throw InvalidInput("d must be >= 0");
    const auto& xs = beta.elements();
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] - xs[i] <= d)
            return false;
    return true;
}

bool is_d_distinct(const Partition& p, Int d)
{
    if (d < 0)
        throw InvalidInput("d must be >= 0");
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] - parts[i] < d)
            return false;
    return true;
}

} // namespace corehook
