#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wog/graph.hpp"
#include "wog/graph_io.hpp"
#include "wog/ideal.hpp"
#include "wog/vertex_set.hpp"

namespace wog::test {

inline std::string data_path(const std::string& file) { return std::string(WOG_TEST_DATA_DIR) + "/" + file; }

inline WeightedOrientedGraph graph(const std::string& text) { return parse_graph(text).graph; }

/// Renders each set over `names`, e.g. "{x1, x2}".
inline std::vector<std::string> rendered(const std::vector<VertexSet>& sets, std::span<const std::string> names) {
  std::vector<std::string> out;
  for (auto s : sets) out.push_back(render_set(s, names));
  return out;
}

inline std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(render_monomial(g, ideal.variables()));
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline VertexSet named_set(std::span<const std::string> names, std::initializer_list<const char*> members) {
  VertexSet s = 0;
  for (const char* m : members) {
    auto it = std::find(names.begin(), names.end(), m);
    if (it == names.end()) throw std::runtime_error(std::string("no vertex ") + m);
    s |= singleton(static_cast<std::uint32_t>(it - names.begin()));
  }
  return s;
}

}  // namespace wog::test
