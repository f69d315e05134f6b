#include "corehook/cli.hpp"

#include "corehook/core_poset.hpp"
#include "corehook/errors.hpp"
#include "corehook/maxhook.hpp"
#include "corehook/oracle.hpp"
#include "corehook/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace corehook::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    std::string out_path;
    std::string target;
    Int s = 0;
    Int t = 0;
    Int d = 0;
    bool has_d = false;
};

template <typename Range>
std::string join(const Range& values, std::string_view sep)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

json optional_json(const std::optional<Int>& v)
{
    return v ? json(*v) : json(nullptr);
}

void require_ordered(const Options& o)
{
    if (o.s >= o.t)
        throw InvalidInput("require s < t");
}

void require_d(const Options& o, Int minimum)
{
    if (o.d < minimum)
        throw InvalidInput("d must be >= " + std::to_string(minimum));
}

json result_json(const MaxHookResult& r)
{
    json j;
    j["s"] = r.s;
    j["t"] = r.t;
    j["d"] = r.d;
    j["H"] = r.H;
    j["case"] = std::string(case_tag_name(r.case_tag));
    j["B"] = optional_json(r.B);
    j["s_bar"] = optional_json(r.s_bar);
    j["s_tilde"] = optional_json(r.s_tilde);
    if (r.gcd > 1) {
        j["gcd"] = r.gcd;
        j["reduced_case"] = std::string(case_tag_name(*r.reduced_case));
    }
    return j;
}

std::string result_text(const MaxHookResult& r)
{
    std::ostringstream os;
    os << "s=" << r.s << " t=" << r.t << " d=" << r.d << '\n';
    os << "H=" << r.H << '\n';
    os << "case=" << case_tag_name(r.case_tag) << '\n';
    if (r.gcd > 1)
        os << "gcd=" << r.gcd << " reduced_case=" << case_tag_name(*r.reduced_case) << '\n';
    if (r.B)
        os << "B=" << *r.B << " s_bar=" << *r.s_bar << " s_tilde=" << *r.s_tilde << '\n';
    return os.str();
}

std::string cmd_maxhook(const Options& o)
{
    require_ordered(o);
    require_d(o, 1);
    const auto r = max_hook_general(o.s, o.t, o.d);
    return o.format == "json" ? result_json(r).dump() + "\n" : result_text(r);
}

std::string cmd_witness(const Options& o)
{
    require_ordered(o);
    require_d(o, 1);
    const auto r = max_hook_general(o.s, o.t, o.d);
    if (o.format == "json") {
        auto j = result_json(r);
        j["beta"] = r.witness_beta.elements();
        j["witness"] = r.witness.parts();
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << result_text(r);
    os << "beta=[" << join(r.witness_beta.elements(), ",") << "]\n";
    os << "partition=(" << join(r.witness.parts(), ",") << ")\n";
    return os.str();
}

std::string cmd_enumerate(const Options& o)
{
    require_ordered(o);
    require_d(o, 0);
    const auto cores = enumerate_d_distinct_cores(o.s, o.t, o.d);
    if (o.format == "json") {
        json j;
        j["s"] = o.s;
        j["t"] = o.t;
        j["d"] = o.d;
        j["count"] = cores.size();
        j["cores"] = json::array();
        for (const auto& beta : cores)
            j["cores"].push_back({{"beta", beta.elements()}, {"partition", partition_from_beta(beta).parts()}});
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "s=" << o.s << " t=" << o.t << " d=" << o.d << " count=" << cores.size() << '\n';
    for (const auto& beta : cores)
        os << "{" << join(beta.elements(), ",") << "} -> (" << join(partition_from_beta(beta).parts(), ",") << ")\n";
    return os.str();
}

std::string cmd_info(const Options& o)
{
    require_ordered(o);
    if (std::gcd(o.s, o.t) != 1)
        throw InvalidInput("info is defined for coprime s, t only");
    const auto params = CoreParams::from_generators(o.s, o.t);
    const auto poset = gap_poset(params);
    const auto edge = bottom_edge(params);

    struct Row {
        Int residue;
        std::vector<Int> members;
        Int formula;
    };
    std::vector<Row> rows;
    for (Int i = 0; i < params.k(); ++i) {
        auto members = ledge(i, params).members;
        std::sort(members.begin(), members.end());
        rows.push_back({i, std::move(members), ledge_length_formula(i, params)});
    }

    if (o.format == "json") {
        json j;
        j["s"] = params.s();
        j["t"] = params.t();
        j["k"] = params.k();
        j["s_bar"] = params.s_bar();
        j["M"] = params.frobenius();
        j["P_size"] = poset.size();
        j["E_order"] = edge.ordered();
        j["ledges"] = json::array();
        for (const auto& row : rows)
            j["ledges"].push_back({{"residue", row.residue},
                                   {"members", row.members},
                                   {"length", row.members.size()},
                                   {"formula", row.formula}});
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "s=" << params.s() << " t=" << params.t() << " k=" << params.k() << " s_bar=" << params.s_bar() << '\n';
    os << "M=" << params.frobenius() << '\n';
    os << "|P|=" << poset.size() << '\n';
    os << "E-order " << join(edge.ordered(), ",") << '\n';
    for (const auto& row : rows)
        os << "L_" << row.residue << "={" << join(row.members, ",") << "} length=" << row.members.size()
           << " formula=" << row.formula << '\n';
    return os.str();
}

std::string cmd_verify(const Options& o, int& code)
{
    require_ordered(o);
    require_d(o, 1);
    VerifyOutcome outcome{o.s, o.t, o.d, max_hook_general(o.s, o.t, o.d).H, oracle_max_hook(o.s, o.t, o.d).H_true};
    code = outcome.ok() ? kOk : kMismatch;
    return format_verify(outcome, o.format == "json");
}

std::string cmd_render(const Options& o)
{
    require_ordered(o);
    if (o.target == "edge" && !o.has_d) {
        if (std::gcd(o.s, o.t) != 1)
            throw InvalidInput("render edge is defined for coprime s, t only");
        const auto params = CoreParams::from_generators(o.s, o.t);
        return render_edge_dot(params, bottom_edge(params), BetaSet{});
    }
    if (!o.has_d)
        throw InvalidInput("render " + o.target + " needs d");
    require_d(o, 1);

    MaxHookResult r;
    try {
        r = max_hook_general(o.s, o.t, o.d);
    } catch (const InfiniteFamily& e) {
        // Nothing finite to draw.
        throw InvalidInput(e.what());
    }

    if (o.target == "young")
        return render_young(r.witness);
    if (o.target == "hasse") {
        std::vector<Int> nodes;
        if (r.gcd == 1) {
            nodes = gap_poset(CoreParams::from_generators(o.s, o.t)).elements();
        } else {
            for (Int x = 1; x <= r.H; ++x)
                if (!is_representable(x, o.s, o.t))
                    nodes.push_back(x);
        }
        return render_hasse_dot(nodes, o.s, o.t, r.witness_beta);
    }
    if (r.gcd != 1)
        throw InvalidInput("render edge is defined for coprime s, t only");
    const auto params = CoreParams::from_generators(o.s, o.t);
    return render_edge_dot(params, bottom_edge(params), r.witness_beta);
}

void emit(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path);
    if (!file)
        throw InvalidInput("cannot open " + o.out_path + " for writing");
    file << text;
}

} // namespace

std::string format_verify(const VerifyOutcome& v, bool as_json)
{
    if (as_json) {
        json j;
        j["s"] = v.s;
        j["t"] = v.t;
        j["d"] = v.d;
        j["status"] = v.ok() ? "OK" : "MISMATCH";
        if (v.ok()) {
            j["H"] = *v.formula_H;
        } else {
            j["formula_H"] = optional_json(v.formula_H);
            j["oracle_H"] = optional_json(v.oracle_H);
        }
        return j.dump() + "\n";
    }
    if (v.ok())
        return "OK H=" + std::to_string(*v.formula_H) + "\n";
    const auto show = [](const std::optional<Int>& h) { return h ? std::to_string(*h) : std::string("none"); };
    std::ostringstream os;
    os << "MISMATCH s=" << v.s << " t=" << v.t << " d=" << v.d << '\n';
    os << "  formula H=" << show(v.formula_H) << '\n';
    os << "  oracle  H=" << show(v.oracle_H) << '\n';
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximum hook length of d-distinct (s,t)-core partitions", "corehook"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
    };
    const auto add_std = [&](CLI::App* sub) {
        sub->add_option("s", o.s, "Smaller generator")->required();
        sub->add_option("t", o.t, "Larger generator")->required();
        sub->add_option("d", o.d, "Distinctness parameter")->required();
        add_format(sub);
    };

    auto* maxhook = app.add_subcommand("maxhook", "Closed-form maximum hook length");
    add_std(maxhook);
    auto* witness = app.add_subcommand("witness", "Core partition attaining the maximum");
    add_std(witness);
    auto* verify = app.add_subcommand("verify", "Compare the closed form with brute force");
    add_std(verify);
    auto* enumerate = app.add_subcommand("enumerate", "List all d-distinct (s,t)-cores");
    add_std(enumerate);

    auto* info = app.add_subcommand("info", "Gap poset, bottom edge and ledges of coprime (s,t)");
    info->add_option("s", o.s, "Smaller generator")->required();
    info->add_option("t", o.t, "Larger generator")->required();
    add_format(info);

    auto* render = app.add_subcommand("render", "ASCII Young diagram or DOT graphs");
    render->add_option("target", o.target, "young | hasse | edge")
        ->required()
        ->check(CLI::IsMember({"young", "hasse", "edge"}));
    render->add_option("s", o.s, "Smaller generator")->required();
    render->add_option("t", o.t, "Larger generator")->required();
    auto* d_opt = render->add_option("d", o.d, "Distinctness parameter (optional for edge)");
    render->add_option("--out", o.out_path, "Write to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    o.has_d = d_opt->count() > 0;

    try {
        int code = kOk;
        std::string text;
        if (maxhook->parsed())
            text = cmd_maxhook(o);
        else if (witness->parsed())
            text = cmd_witness(o);
        else if (verify->parsed())
            text = cmd_verify(o, code);
        else if (enumerate->parsed())
            text = cmd_enumerate(o);
        else if (info->parsed())
            text = cmd_info(o);
        else
            text = cmd_render(o);
        emit(o, text, out);
        return code;
    } catch (const InfiniteFamily& e) {
        err << e.what() << '\n';
        return kInfiniteFamily;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Degenerate& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace corehook::cli
