#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wog/graph.hpp"
#include "wog/ideal.hpp"

namespace wog {

/// Generators of a squarefree ideal in a chosen order, over `variables`.
struct DualOrdering {
  std::vector<std::string> variables;
  std::vector<Monomial> generators;
};

/// Colon (M_1..M_{t-1}) : M_t for one position t >= 1 (0-based).
struct QuotientStep {
  std::size_t position = 0;
  bool linear = true;
  /// Variables generating the colon when linear.
  std::vector<VarIndex> variables;
  /// A minimal non-variable generator of the colon otherwise.
  std::optional<Monomial> obstruction;
};

struct LinearQuotientReport {
  bool linear = true;
  std::optional<std::size_t> first_failure;
  std::vector<QuotientStep> steps;
  /// All generators share one degree.
  bool pure = true;
};

QuotientStep quotient_step(const std::vector<Monomial>& gens, std::size_t t);

/// Checks every position; witnesses are recorded for each.
LinearQuotientReport verify_linear_quotients(const DualOrdering& ord);

/// Duals of I(D)^pol by degree, then lexicographically for the variable
/// order x_{1,1} > ... > x_{1,w} > y_{1,1} > ... > x_{2,1} > ... taken along
/// the leaf matching. `pairs` overrides the matching and its order; when
/// absent and exactly one pair (x_s, y_s) has an edge x_s -> y_s with
/// weight(x_s) > 1, that pair is moved to the front. Throws InputError
/// without a leaf perfect matching.
DualOrdering canonical_dual_ordering(const WeightedOrientedGraph& d,
                                     std::optional<LeafMatching> pairs = std::nullopt,
                                     std::size_t cap = 24);

/// Matched pairs (x, y) with an edge x -> y and weight(x) > 1.
std::vector<std::pair<VertexId, VertexId>> tail_weight_violations(const WeightedOrientedGraph& d,
                                                                  const LeafMatching& m);

/// Tries the ideal's own generator order, then a backtracking search.
/// Throws CapExceeded past `node_cap` search nodes.
std::optional<DualOrdering> search_linear_quotients(const MonomialIdeal& ideal, std::size_t node_cap = 1'000'000);

}  // namespace wog
