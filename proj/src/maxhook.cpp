#include "corehook/maxhook.hpp"

#include "corehook/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace corehook {

std::string_view case_tag_name(CaseTag tag)
{
    switch (tag) {
    case CaseTag::k1_or_ks_le_d: return "K1_OR_KS_LE_D";
    case CaseTag::k_le_d_lt_s: return "K_LE_D_LT_S";
    case CaseTag::b_minus_2: return "B_MINUS_2";
    case CaseTag::b_minus_s_minus_1: return "B_MINUS_S_MINUS_1";
    case CaseTag::b_plus_k_minus_ss_minus_1: return "B_PLUS_K_MINUS_SS_MINUS_1";
    case CaseTag::b_minus_1: return "B_MINUS_1";
    case CaseTag::scaled_k1_plus_2: return "SCALED_K1_PLUS_2";
    case CaseTag::scaled_k1_plus_1: return "SCALED_K1_PLUS_1";
    case CaseTag::scaled_plus_2: return "SCALED_PLUS_2";
    case CaseTag::scaled_plus_1: return "SCALED_PLUS_1";
    }
    return "UNKNOWN";
}

namespace {

struct CoprimeEvaluation {
    Int H = 0;
    CaseTag tag = CaseTag::k1_or_ks_le_d;
    std::optional<Int> B;
    std::optional<Int> s_bar;
    std::optional<Int> s_tilde;
    std::optional<Int> residue; ///< s̄s̃ mod k
};

Int ceil_div(Int a, Int b)
{
    // b > 0; a may be negative only when s̄s̃ = 0, which never happens for d < k.
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

CoprimeEvaluation evaluate_coprime(const CoreParams& params, Int d)
{
    const Int s = params.s(), k = params.k();
    if (d < 1)
        throw InvalidInput("d must be >= 1");

    if (k == 1 || (k <= d && s <= d))
        return {s - 1, CaseTag::k1_or_ks_le_d, {}, {}, {}, {}};
    if (k <= d) // 1 < k <= d < s
        return {s + k - 1, CaseTag::k_le_d_lt_s, {}, {}, {}, {}};

    const Int s_bar = params.s_bar();
    const Int st = s_tilde(params, d);
    const Int product = s_bar * st;
    const Int r = product % k;
    const Int B = ((s - 1) / k) * (k + s * st) + s * (ceil_div(product - 1, k) + st - 1) + s_bar;

    CoprimeEvaluation out{0, CaseTag::b_minus_2, B, s_bar, st, r};
    if (r == 1) {
        out.H = B - 2;
        out.tag = CaseTag::b_minus_2;
    } else if (r <= d) {
        out.H = B - s - 1;
        out.tag = CaseTag::b_minus_s_minus_1;
    } else if (r < k - 1) {
        // Reduced product: H - (x mod s) must be a multiple of s.
        out.H = B + k - r - 1;
        out.tag = CaseTag::b_plus_k_minus_ss_minus_1;
    } else {
        out.H = B - 1;
        out.tag = CaseTag::b_minus_1;
    }
    return out;
}

BetaSet positive_down_set(Int x, Int s, Int t)
{
    std::vector<Int> members;
    for (Int y : generalized_ideal(x, s, t, 1).members)
        if (y > 0)
            members.push_back(y);
    return BetaSet(std::move(members));
}

void check_witness(const MaxHookResult& r, Int s, Int t, Int d)
{
    const bool ok = is_st_core(r.witness, s, t) && is_d_distinct(r.witness, d) &&
                    max_hook(r.witness) == std::optional<Int>(r.H) && beta_set(r.witness) == r.witness_beta;
    if (!ok)
        throw InvariantViolation("witness for (" + std::to_string(s) + "," + std::to_string(t) + "," +
                                 std::to_string(d) + ") fails the core / distinctness / max-hook check");
}

void validate_generators(Int s, Int t, Int d)
{
    if (d < 1)
        throw InvalidInput("d must be >= 1");
    if (s == t)
        throw Degenerate("s = t is outside both closed forms");
    if (s > t)
        throw InvalidInput("require s < t");
    if (s < 2)
        throw InvalidInput("s must be >= 2");
    if (t > kMaxGenerator)
        throw InvalidInput("t exceeds " + std::to_string(kMaxGenerator));
}

} // namespace

MaxHookResult max_hook_coprime(const CoreParams& params, Int d)
{
    const auto eval = evaluate_coprime(params, d);
    MaxHookResult r;
    r.s = params.s();
    r.t = params.t();
    r.d = d;
    r.H = eval.H;
    r.case_tag = eval.tag;
    r.B = eval.B;
    r.s_bar = eval.s_bar;
    r.s_tilde = eval.s_tilde;
    r.witness_beta = BetaSet(principal_ideal(r.H, params));
    r.witness = partition_from_beta(r.witness_beta);
    check_witness(r, r.s, r.t, d);
    return r;
}

IntervalIdeal best_interval_ideal(const CoreParams& params, Int d)
{
    const Int s = params.s(), k = params.k();
    if (d < 1 || d >= k)
        throw InvalidInput("best_interval_ideal requires 1 <= d < k");

    const auto eval = evaluate_coprime(params, d);
    const Int s_bar = *eval.s_bar, st = *eval.s_tilde, r = *eval.residue;
    const Int product = s_bar * st;

    const auto members = [&](Int i) { return ledge(floor_mod(i, k), params).members; };
    const auto require_nonempty = [](const std::vector<Int>& v, const char* what) {
        if (v.empty())
            throw InvariantViolation(std::string("empty ledge where the construction needs ") + what);
    };

    // Start ledge, whether it is taken whole, and the extra end points.
    Int start = 0;
    bool whole_start = false;
    bool append_next = false;
    bool prepend_previous = false;
    if (r == 1) {
        start = s_bar - 2;
        append_next = true;
    } else if (r <= d) {
        start = s_bar - 1;
    } else if (r == k - 1) {
        start = s_bar - 1;
        append_next = true;
    } else {
        start = s_bar - product - 1;
        whole_start = true;
        append_next = true;
        prepend_previous = true;
    }

    std::vector<Int> elements;
    if (prepend_previous) {
        const auto prev = members(start - s_bar);
        require_nonempty(prev, "a last element");
        elements.push_back(prev.back());
    }
    for (Int j = 0; j < st; ++j) {
        auto ledge_members = members(start + s_bar * j);
        if (j == 0 && !whole_start)
            std::erase_if(ledge_members, [&](Int x) { return x >= s; }); // drop the non-minimal element
        elements.insert(elements.end(), ledge_members.begin(), ledge_members.end());
    }
    if (append_next) {
        const auto next = members(start + product);
        require_nonempty(next, "a first element");
        elements.push_back(next.front());
    }
    require_nonempty(elements, "any element");

    const auto edge = bottom_edge(params);
    std::sort(elements.begin(), elements.end(),
              [&](Int a, Int b) { return edge.position(a) < edge.position(b); });
    IntervalIdeal ideal{std::move(elements)};
    if (!is_interval_ideal(ideal.run, params, edge))
        throw InvariantViolation("constructed run is not an interval ideal");

    const Int generator = ideal.first() + static_cast<Int>(ideal.size() - 1) * s;
    if (generator != eval.H)
        throw InvariantViolation("interval ideal reconstructs " + std::to_string(generator) +
                                 " but the closed form gives " + std::to_string(eval.H));
    if (edge_trace(generator, params, edge) != ideal)
        throw InvariantViolation("interval ideal differs from <H> ∩ E");
    return ideal;
}

MaxHookResult max_hook_general(Int s, Int t, Int d)
{
    validate_generators(s, t, d);
    const Int b = std::gcd(s, t);
    if (b > d)
        throw InfiniteFamily("infinite family: gcd(s,t) > d");
    if (b == 1)
        return max_hook_coprime(CoreParams(s, t - s), d);

    if (s / b < 2)
        throw Degenerate("s / gcd(s,t) must be >= 2");
    const CoreParams reduced(s / b, (t - s) / b);
    const Int reduced_d = d / b;
    if (reduced_d < 1)
        throw InvariantViolation("floor(d / gcd) = 0 despite gcd <= d");
    const auto eval = evaluate_coprime(reduced, reduced_d);

    const Int k = reduced.k();
    bool plus_two = false;
    CaseTag tag;
    if (k == 1) {
        plus_two = reduced_d < reduced.s();
        tag = plus_two ? CaseTag::scaled_k1_plus_2 : CaseTag::scaled_k1_plus_1;
    } else {
        plus_two = reduced_d < k && (*eval.residue == 1 || (*eval.residue > reduced_d && *eval.residue == k - 1));
        tag = plus_two ? CaseTag::scaled_plus_2 : CaseTag::scaled_plus_1;
    }

    MaxHookResult r;
    r.s = s;
    r.t = t;
    r.d = d;
    r.gcd = b;
    r.H = b * (eval.H + (plus_two ? 2 : 1)) - 1;
    r.case_tag = tag;
    r.reduced_case = eval.tag;
    r.B = eval.B;
    r.s_bar = eval.s_bar;
    r.s_tilde = eval.s_tilde;
    r.witness_beta = positive_down_set(r.H, s, t);
    r.witness = partition_from_beta(r.witness_beta);
    check_witness(r, s, t, d);
    return r;
}

GeneralizedIdeal generalized_ideal(Int x, Int s, Int t, Int b)
{
    if (x < 0 || s < 1 || t < 1 || b < 1)
        throw InvalidInput("generalized_ideal needs x >= 0 and positive s, t, b");
    GeneralizedIdeal out{x, b, {}};
    for (Int a = 0; x - a * b * s >= 0; ++a)
        for (Int y = x - a * b * s; y >= 0; y -= b * t)
            out.members.push_back(y);
    std::sort(out.members.begin(), out.members.end(), std::greater<>());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

Witness witness_core(Int s, Int t, Int d)
{
    auto r = max_hook_general(s, t, d);
    return {std::move(r.witness_beta), std::move(r.witness)};
}

} // namespace corehook
