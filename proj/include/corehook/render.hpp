#pragma once

#include "corehook/core_poset.hpp"
#include "corehook/partitions.hpp"

#include <string>
#include <vector>

namespace corehook {

/// Box drawing of the Young diagram with the hook length printed in each cell.
std::string render_young(const Partition& p);

/// DOT digraph with one node per entry of `nodes` and an edge x -> y
/// whenever y = x - s or y = x - t is also a node. Members of
/// `highlight` get style=filled.
std::string render_hasse_dot(const std::vector<Int>& nodes, Int s, Int t, const BetaSet& highlight);

/// DOT path through E in <_E order, coloured by ledge. Members of
/// `highlight` are drawn as double circles.
std::string render_edge_dot(const CoreParams& params, const BottomEdge& edge, const BetaSet& highlight);

} // namespace corehook
