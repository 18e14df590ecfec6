#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wog/classify.hpp"
#include "wog/generators.hpp"
#include "wog/homology.hpp"

namespace wog {

struct SweepOptions {
  InstanceSpec spec;
  bool oracle = true;
  OracleOptions oracle_options{};
  CoverCaps caps{};
  bool cover_structure = true;
  bool duality = true;
  bool prime_routes = true;
  bool conjecture = true;
  bool colon_displays = true;
  /// Second field for the CM cross-check; differences are counted only.
  std::optional<Field> cross_field;
  std::size_t failure_samples = 20;
};

/// One line of the per-instance log.
struct InstanceRecord {
  std::size_t id = 0;
  std::string graph;  // graph text format
  GraphClass graph_class = GraphClass::Uncovered;
  Verdict cm = Verdict::Unknown;
  Verdict unmixed = Verdict::Unknown;
  Verdict scm = Verdict::Unknown;
  std::optional<bool> oracle_cm;
  std::optional<bool> oracle_scm;
  std::optional<bool> quotients_linear;
  std::optional<std::string> conjecture;
  std::vector<std::string> failures;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t disagreements = 0;        // verdict vs oracle
  std::size_t unmixed_mismatches = 0;   // StrongL3 vs Heights vs (c)
  std::size_t quotient_failures = 0;    // (c) or single violation without linear quotients
  std::size_t single_violation = 0;
  std::size_t scm_failures = 0;         // single violation without oracle sequential CM
  std::size_t cover_checks = 0;
  std::size_t cover_violations = 0;
  std::size_t duality_violations = 0;
  std::size_t route_mismatches = 0;
  std::size_t property_violations = 0;  // consequences of a verdict that failed
  std::size_t colon_checked = 0;
  std::size_t colon_violations = 0;
  std::size_t conjecture_pass = 0;
  std::size_t conjecture_vacuous = 0;
  std::size_t conjecture_counterexamples = 0;
  std::size_t cm_yes = 0;
  std::size_t field_differences = 0;
  OracleAudit audit;
  double seconds = 0;
  std::vector<std::string> failure_samples;

  std::size_t failures() const;
  bool ok() const { return failures() == 0 && audit.clean(); }
};

/// Runs every enabled check on each generated instance. `on_instance`
/// receives each record as soon as it is complete.
SweepSummary run_sweep(const SweepOptions& opt,
                       const std::function<void(const InstanceRecord&)>& on_instance = {});

/// Checks applied to a single graph; exposed for the fixtures.
InstanceRecord check_instance(const WeightedOrientedGraph& d, const SweepOptions& opt, SweepSummary& summary);

}  // namespace wog
