#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wog/covers.hpp"
#include "wog/graph.hpp"
#include "wog/homology.hpp"
#include "wog/ideal.hpp"
#include "wog/linear_quotients.hpp"

namespace wog {

enum class GraphClass { Whiskered, SingleViolation, Bipartite, Uncovered };
enum class Verdict { Yes, No, Unknown };

std::string to_string(GraphClass c);
std::string to_string(Verdict v);

struct ConditionStatus {
  std::string label;
  bool pass = true;
  std::string witness;  // empty on pass
};

struct ClassificationReport {
  GraphClass graph_class = GraphClass::Uncovered;
  std::vector<ConditionStatus> conditions;
  Verdict cm = Verdict::Unknown;
  Verdict unmixed = Verdict::Unknown;
  Verdict scm = Verdict::Unknown;

  std::optional<LeafMatching> matching;
  std::optional<LinearQuotientReport> quotients;

  bool oracle_checked = false;
  Field oracle_field{};
  std::optional<bool> oracle_cm;
  std::optional<bool> oracle_scm;
  /// Oracle results contradicting a yes/no verdict.
  std::vector<std::string> disagreements;
  /// Consequences of the verdict that failed to hold.
  std::vector<std::string> property_violations;

  const ConditionStatus* condition(const std::string& label) const;
};

struct ClassifyOptions {
  bool oracle = false;
  bool quotients = true;
  OracleOptions oracle_options{};
  CoverCaps caps{};
};

/// Graphs with a leaf perfect matching. CM iff no matched edge x -> y has
/// weight(x) > 1; with exactly one such edge the verdict for sequential CM
/// is yes, backed by the dual ordering.
ClassificationReport classify_whiskered(const WeightedOrientedGraph& d, const ClassifyOptions& opt = {});

/// Requires exactly one tail-weight violation; otherwise graph_class is
/// Uncovered.
ClassificationReport classify_single_violation(const WeightedOrientedGraph& d, const ClassifyOptions& opt = {});

/// Bipartite graphs without isolated vertices: CM iff some ordered perfect
/// matching satisfies the ordering conditions (a)-(c) and the weight
/// conditions (d)-(e). Throws InputError on non-bipartite input.
ClassificationReport classify_bipartite(const WeightedOrientedGraph& d, const ClassifyOptions& opt = {});

/// Whiskered graphs first, then bipartite ones; anything else is Uncovered
/// (and gets oracle verdicts when requested).
ClassificationReport classify(const WeightedOrientedGraph& d, const ClassifyOptions& opt = {});

/// (d)/(e) failures of one ordered matching, empty when both hold.
std::vector<ConditionStatus> bipartite_weight_conditions(const WeightedOrientedGraph& d, const LeafMatching& m);

enum class ConjectureOutcome { Pass, Counterexample, Vacuous };
std::string to_string(ConjectureOutcome o);

struct ConjectureReport {
  ConjectureOutcome outcome = ConjectureOutcome::Vacuous;
  bool unmixed = false;
  bool radical_cm = false;
  bool cm = false;
};

/// unmixed and CM radical should force CM.
ConjectureReport check_conjecture(const WeightedOrientedGraph& d, const OracleOptions& opt = {},
                                  const CoverCaps& caps = {});

/// The Artinian ideal J = I(D[X]) + (z_i^(w(x_i)+1)) over z1..zr, and the
/// renaming z_{i,j} -> x_{i,j} (j <= w(x_i)), z_{i,w(x_i)+1} -> y_{i,1}
/// applied to its polarization.
struct ArtinianWitness {
  MonomialIdeal j;
  MonomialIdeal renamed_polarization;  // over the registry of I(D)^pol when possible
  MonomialIdeal target;                // I(D)^pol
  bool matches = false;
};

ArtinianWitness artinian_witness(const WeightedOrientedGraph& d);

}  // namespace wog
