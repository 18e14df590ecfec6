#include "wog/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "wog/error.hpp"

namespace wog {

namespace {

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

}  // namespace

ParsedGraph parse_graph(std::string_view text, bool raw_weights) {
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind)) continue;
    std::string a, b, extra;
    if (!(words >> a >> b) || (words >> extra))
      throw InputError(at_line(n) + "expected '" + kind + "' followed by exactly two fields");
    if (kind == "vertex") {
      if (b.find_first_not_of("0123456789") != std::string::npos || b.size() > 18)
        throw InputError(at_line(n) + "weight '" + b + "' is not a natural number");
      const Weight w = std::stoull(b);
      if (w < 1) throw InputError(at_line(n) + "weight of '" + a + "' must be >= 1");
      vertices.push_back({a, w});
    } else if (kind == "edge") {
      edges.emplace_back(a, b);
    } else {
      throw InputError(at_line(n) + "unknown directive '" + kind + "'");
    }
  }
  std::set<std::string> names;
  for (const auto& v : vertices) names.insert(v.name);
  for (const auto& v : vertices) {
    const auto us = v.name.rfind('_');
    if (us == std::string::npos || us + 1 == v.name.size()) continue;
    const auto suffix = v.name.substr(us + 1);
    if (suffix.find_first_not_of("0123456789") == std::string::npos && names.count(v.name.substr(0, us)))
      throw InputError("vertex name '" + v.name + "' collides with a polarized copy of '" +
                       v.name.substr(0, us) + "'");
  }
  ParsedGraph out{WeightedOrientedGraph(std::move(vertices), edges), {}};
  if (raw_weights) {
    const auto& g = out.graph;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if ((g.is_source(v) || g.is_sink(v)) && g.weight(v) > 1)
        out.warnings.push_back("raw weight " + std::to_string(g.weight(v)) + " kept on " +
                               (g.is_source(v) ? "source '" : "sink '") + g.name(v) + "'");
  } else {
    out.graph = normalize_boundary_weights(out.graph);
  }
  return out;
}

ParsedGraph read_graph_file(const std::string& path, bool raw_weights) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str(), raw_weights);
}

std::string render_graph(const WeightedOrientedGraph& d) {
  std::string out;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    out += "vertex " + d.name(v) + " " + std::to_string(d.weight(v)) + "\n";
  for (const auto& e : d.edges()) out += "edge " + d.name(e.from) + " " + d.name(e.to) + "\n";
  return out;
}

WeightedOrientedGraph fixture_path() {
  return WeightedOrientedGraph({{"x1", 2}, {"x2", 3}, {"y1", 1}, {"y2", 1}},
                               {{"y1", "x1"}, {"x1", "x2"}, {"x2", "y2"}});
}

WeightedOrientedGraph fixture_whiskered() {
  return WeightedOrientedGraph(
      {{"x1", 2}, {"x2", 2}, {"x3", 1}, {"x4", 1}, {"y1", 1}, {"y2", 1}, {"y3", 1}, {"y4", 1}},
      {{"x1", "y1"}, {"x2", "x1"}, {"x1", "x4"}, {"y2", "x2"}, {"x2", "x3"}, {"x2", "x4"},
       {"x3", "y3"}, {"x3", "x4"}, {"y4", "x4"}});
}

WeightedOrientedGraph fixture_bipartite() {
  return WeightedOrientedGraph(
      {{"x1", 2}, {"x2", 2}, {"x3", 1}, {"x4", 1}, {"y1", 1}, {"y2", 1}, {"y3", 1}, {"y4", 2}},
      {{"y1", "x1"}, {"x1", "y2"}, {"x1", "y3"}, {"y4", "x1"}, {"y2", "x2"}, {"x2", "y3"},
       {"y3", "x3"}, {"x4", "y4"}});
}

}  // namespace wog
