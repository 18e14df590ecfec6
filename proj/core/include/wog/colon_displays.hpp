#pragma once

#include <string>
#include <vector>

#include "wog/graph.hpp"
#include "wog/ideal.hpp"

namespace wog {

/// Colon identities at the last pair (x_r, y_r) of an ordered matching of a
/// CM bipartite graph with weight(y_r) >= 2. Weights above 2 are lowered to
/// 2 first. With V' and V'' the weight-1 and weight-2 out-neighbours of y_r:
///   (I : y_r)          = (x_r y_r) + (x_i y_r : x_i -> y_r) + (V') + (x_i^2 : V'') + I(D \ V')
///   ((I : y_r), y_r)   = (V', y_r) + (x_i^2 : V'') + I(D \ A) = (I : x_r y_r)
///   ((I : y_r) : y_r)  = (N^-(y_r), V') + (x_i^2 : V'') + I(D \ B)
/// with A = V' + y_r and B = N^-(y_r) + V'. Finally L1 = I(H) + (x_i^2 : V''),
/// H dropping A and the edges into V'', partially polarized on V'' and
/// renamed x_{i,1} -> x_i, x_{i,2} -> y_i, equals I(F).
struct ColonDisplayReport {
  bool applicable = false;  // weight(y_r) >= 2
  std::vector<std::string> violations;
  MonomialIdeal l1;
  MonomialIdeal l1_renamed;
  MonomialIdeal f_ideal;
};

ColonDisplayReport check_colon_displays(const WeightedOrientedGraph& d, const LeafMatching& ordered);

}  // namespace wog
