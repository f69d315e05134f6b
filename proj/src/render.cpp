#include "corehook/render.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <string_view>

namespace corehook {

namespace {

std::string quoted(Int x)
{
    return '"' + std::to_string(x) + '"';
}

std::string border(Int cells, std::size_t width)
{
    std::string line = "+";
    for (Int j = 0; j < cells; ++j)
        line += std::string(width, '-') + "+";
    return line;
}

// Ledge colours; residues 0, 1, 2 get blue, red, green.
constexpr std::array<std::string_view, 8> kPalette{
    "#377eb8", "#e41a1c", "#4daf4a", "#ff7f00", "#984ea3", "#a65628", "#f781bf", "#999999"};

} // namespace

std::string render_young(const Partition& p)
{
    if (p.empty())
        return "(empty partition)\n";
    const auto grid = hook_length_grid(p);
    const std::size_t width = std::to_string(grid[0][0]).size();

    std::ostringstream os;
    os << border(p.parts()[0], width) << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << '|';
        for (Int h : grid[i]) {
            const auto label = std::to_string(h);
            os << std::string(width - label.size(), ' ') << label << '|';
        }
        os << '\n' << border(p.parts()[i], width) << '\n';
    }
    return os.str();
}

std::string render_hasse_dot(const std::vector<Int>& nodes, Int s, Int t, const BetaSet& highlight)
{
    std::vector<Int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const auto present = [&](Int y) { return std::binary_search(sorted.begin(), sorted.end(), y, std::greater<>()); };

    std::ostringstream os;
    os << "digraph \"P_" << s << "_" << t << "\" {\n";
    os << "  node [shape=circle];\n";
    for (Int x : sorted) {
        os << "  " << quoted(x);
        if (highlight.contains(x))
            os << " [style=filled, fillcolor=\"lightblue\"]";
        os << ";\n";
    }
    for (Int x : sorted)
        for (Int u : {s, t})
            if (present(x - u))
                os << "  " << quoted(x) << " -> " << quoted(x - u) << ";\n";
    os << "}\n";
    return os.str();
}

std::string render_edge_dot(const CoreParams& params, const BottomEdge& edge, const BetaSet& highlight)
{
    const Int k = params.k();
    std::ostringstream os;
    os << "digraph \"E_" << params.s() << "_" << params.t() << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle, style=filled, fontcolor=\"white\"];\n";
    for (Int x : edge.ordered()) {
        const auto residue = static_cast<std::size_t>(x % k);
        os << "  " << quoted(x) << " [fillcolor=\"" << kPalette[residue % kPalette.size()] << "\"";
        if (highlight.contains(x))
            os << ", shape=doublecircle";
        os << "];\n";
    }
    const auto& order = edge.ordered();
    for (std::size_t i = 1; i < order.size(); ++i)
        os << "  " << quoted(order[i - 1]) << " -> " << quoted(order[i]) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace corehook
