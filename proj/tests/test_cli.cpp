#include <catch_amalgamated.hpp>

#include <corehook/cli.hpp>
#include <corehook/core_poset.hpp>
#include <corehook/partitions.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace corehook;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Dot {
    std::set<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t filled = 0;
};

// Accepts the subset of DOT the renderers emit: a digraph header, graph
// attributes, node statements and edge statements, one per line.
std::optional<Dot> parse_dot(const std::string& text)
{
    static const std::regex header(R"re(^digraph "[^"]+" \{$)re");
    static const std::regex attr(R"re(^\s+(rankdir|node|edge|graph)\b.*;$)re");
    static const std::regex node(R"re(^\s+"([^"]+)"( \[[^\]]*\])?;$)re");
    static const std::regex edge(R"re(^\s+"([^"]+)" -> "([^"]+)"( \[[^\]]*\])?;$)re");
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || !std::regex_match(line, header))
        return std::nullopt;
    Dot dot;
    bool closed = false;
    while (std::getline(in, line)) {
        std::smatch m;
        if (closed)
            return std::nullopt;
        if (line == "}")
            closed = true;
        else if (std::regex_match(line, m, edge))
            dot.edges.emplace_back(m[1], m[2]);
        else if (std::regex_match(line, m, node)) {
            dot.nodes.insert(m[1]);
            if (m[2].str().find("style=filled") != std::string::npos)
                ++dot.filled;
        } else if (!std::regex_match(line, attr) && !line.empty())
            return std::nullopt;
    }
    if (!closed)
        return std::nullopt;
    for (const auto& [a, b] : dot.edges)
        if (!dot.nodes.count(a) || !dot.nodes.count(b))
            return std::nullopt;
    return dot;
}

} // namespace

TEST_CASE("maxhook json", "[cli]")
{
    const auto r = invoke({"maxhook", "7", "10", "1", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["H"] == 19);
    CHECK(j["case"] == "B_MINUS_2");
    CHECK(j["B"] == 21);
    CHECK(j["s_bar"] == 1);
    CHECK(j["s_tilde"] == 1);
    CHECK_FALSE(j.contains("gcd"));

    const auto k = nlohmann::json::parse(invoke({"maxhook", "3", "4", "1", "--format", "json"}).out);
    CHECK(k["B"].is_null());
    CHECK(k["case"] == "K1_OR_KS_LE_D");

    const auto g = nlohmann::json::parse(invoke({"maxhook", "14", "20", "2", "--format", "json"}).out);
    CHECK(g["H"] == 41);
    CHECK(g["gcd"] == 2);
    CHECK(g["case"].get<std::string>().rfind("SCALED_", 0) == 0);
}

TEST_CASE("witness json round trip", "[cli]")
{
    for (const auto& [s, t, d] : std::vector<std::tuple<Int, Int, Int>>{{7, 10, 1}, {8, 13, 2}, {4, 6, 2}, {14, 20, 2}}) {
        const auto r = invoke({"witness", std::to_string(s), std::to_string(t), std::to_string(d), "--format", "json"});
        REQUIRE(r.code == cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        const BetaSet beta(j["beta"].get<std::vector<Int>>());
        const Partition p(j["witness"].get<std::vector<Int>>());
        CHECK(partition_from_beta(beta) == p);
        CHECK(beta_set(p) == beta);
        CHECK(max_hook(p) == j["H"].get<Int>());
        CHECK(is_st_core(p, s, t));
        CHECK(is_d_distinct(p, d));
    }
}

TEST_CASE("text output", "[cli]")
{
    const auto r = invoke({"witness", "7", "10", "1"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("H=19\n") != std::string::npos);
    CHECK(r.out.find("beta=[19,12,9,5,2]") != std::string::npos);
    CHECK(r.out.find("partition=(15,9,7,4,2)") != std::string::npos);
    CHECK(invoke({"verify", "8", "13", "2"}).out == "OK H=25\n");
    const auto info = invoke({"info", "7", "10"});
    CHECK(info.out.find("E-order 4,1,8,5,2,9,6,3") != std::string::npos);
    CHECK(info.out.find("|P|=27") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]")
{
    CHECK(invoke({"maxhook", "7", "10", "1"}).code == cli::kOk);
    CHECK(invoke({"maxhook", "4", "6", "1"}).code == cli::kInfiniteFamily);
    CHECK(invoke({"verify", "4", "6", "1"}).code == cli::kInfiniteFamily);
    CHECK(invoke({"maxhook", "10", "7", "1"}).code == cli::kUsage);
    CHECK(invoke({"maxhook", "5", "5", "1"}).code == cli::kUsage);
    CHECK(invoke({"maxhook", "7", "10", "0"}).code == cli::kUsage);
    CHECK(invoke({"maxhook", "7", "x", "1"}).code == cli::kUsage);
    CHECK(invoke({"maxhook", "7"}).code == cli::kUsage);
    CHECK(invoke({"bogus"}).code == cli::kUsage);
    CHECK(invoke({"maxhook", "7", "10", "1", "--format", "yaml"}).code == cli::kUsage);
    CHECK(invoke({"render", "hasse", "7", "10"}).code == cli::kUsage);
    CHECK(invoke({"render", "young", "4", "6", "1"}).code == cli::kUsage);
    const auto bad = invoke({"maxhook", "10", "7", "1"});
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("verify mismatch formatting", "[cli]")
{
    cli::VerifyOutcome v{7, 10, 1, 18, 19};
    CHECK_FALSE(v.ok());
    const auto text = cli::format_verify(v, false);
    CHECK(text.find("MISMATCH") != std::string::npos);
    CHECK(text.find("18") != std::string::npos);
    CHECK(text.find("19") != std::string::npos);
    const auto j = nlohmann::json::parse(cli::format_verify(v, true));
    CHECK(j["formula_H"] == 18);
    CHECK(j["oracle_H"] == 19);
    CHECK(j["status"] == "MISMATCH");
    cli::VerifyOutcome good{7, 10, 1, 19, 19};
    CHECK(good.ok());
    CHECK(cli::format_verify(good, false) == "OK H=19\n");
}

TEST_CASE("hasse diagram is valid DOT", "[cli]")
{
    const auto r = invoke({"render", "hasse", "7", "10", "1"});
    REQUIRE(r.code == cli::kOk);
    const auto dot = parse_dot(r.out);
    REQUIRE(dot.has_value());
    CHECK(dot->nodes.size() == 27);
    CHECK(dot->nodes.count("53"));
    CHECK(dot->filled == 5);
    for (const auto& [a, b] : dot->edges) {
        const Int diff = std::stoll(a) - std::stoll(b);
        CHECK((diff == 7 || diff == 10));
    }
}

TEST_CASE("edge diagram is valid DOT", "[cli]")
{
    const auto r = invoke({"render", "edge", "7", "10", "1"});
    REQUIRE(r.code == cli::kOk);
    const auto dot = parse_dot(r.out);
    REQUIRE(dot.has_value());
    CHECK(dot->nodes.size() == 8);
    CHECK(dot->edges.size() == 7);
}

TEST_CASE("young diagram", "[cli]")
{
    const auto r = invoke({"render", "young", "3", "4", "1"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find('2') != std::string::npos);
    CHECK(invoke({"render", "young", "2", "3", "3"}).code == cli::kOk);
}

TEST_CASE("output file", "[cli]")
{
    const auto path = std::filesystem::temp_directory_path() / "corehook_cli_test.json";
    std::filesystem::remove(path);
    const auto r = invoke({"maxhook", "7", "10", "1", "--format", "json", "--out", path.string()});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["H"] == 19);
    std::filesystem::remove(path);
}

TEST_CASE("in-process output matches golden files", "[cli]")
{
    const std::filesystem::path dir = COREHOOK_GOLDEN_DIR;
    const auto read = [&](const char* name) {
        std::ifstream in(dir / name);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(invoke({"maxhook", "7", "10", "1", "--format", "json"}).out == read("maxhook_7_10_1_json.out"));
    CHECK(invoke({"info", "7", "10"}).out == read("info_7_10.out"));
}
