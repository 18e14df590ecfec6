#pragma once

#include <string>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

/// Structural checks on the minimal covers of H(I(D)^pol) for a graph with
/// a leaf perfect matching. Each cover C is split into C1 (first copies of
/// the x_i), C2 (later copies of the x_i) and C3 (copies of the y_i).
///
/// Always checked: the split touches every pair, at most one later copy per
/// side when x_{i,1} is absent, and moving y_{i,j} (j >= 2) or x_{i,j}
/// (j >= 3) one copy down yields a minimal cover.
/// With no tail-weight violation also: |C| = r with exactly one of the three
/// kinds per pair, every one-step move down and every y -> x swap stays a
/// minimal cover, and C2, C3 determine C1.
/// With exactly one violation (moved to pair 1): sizes r or r+1 with the
/// r+1 case exactly when x_{1,1} and some x_{s,1} with x_s -> x_1 are both
/// missing from C.
struct CoverStructureReport {
  std::size_t covers = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

CoverStructureReport check_cover_structure(const WeightedOrientedGraph& d, std::size_t cap = 24);

}  // namespace wog
