#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

struct ParsedGraph {
  WeightedOrientedGraph graph;
  std::vector<std::string> warnings;
};

/// Lines `vertex <name> <weight>` and `edge <from> <to>`; `#` starts a
/// comment. Source and sink weights are reset to 1 unless `raw_weights`,
/// in which case a warning lists every boundary vertex with weight > 1.
/// Names of the form `<other>_<digits>` clashing with another vertex are
/// rejected, since polarized variables are written that way.
ParsedGraph parse_graph(std::string_view text, bool raw_weights = false);
ParsedGraph read_graph_file(const std::string& path, bool raw_weights = false);

std::string render_graph(const WeightedOrientedGraph& d);

/// Example graphs with their published weights and orientations.
WeightedOrientedGraph fixture_path();       // x1, x2, y1, y2
WeightedOrientedGraph fixture_whiskered();  // x1..x4, y1..y4, one tail-weight violation
WeightedOrientedGraph fixture_bipartite();  // x1..x4, y1..y4, CM

}  // namespace wog
