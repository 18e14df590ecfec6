#include "wog/sweep.hpp"

#include <chrono>

#include "wog/colon_displays.hpp"
#include "wog/cover_structure.hpp"
#include "wog/covers.hpp"
#include "wog/graph_io.hpp"
#include "wog/polarization.hpp"

namespace wog {

std::size_t SweepSummary::failures() const {
  return disagreements + unmixed_mismatches + quotient_failures + scm_failures + cover_violations +
         duality_violations + route_mismatches + property_violations + colon_violations +
         conjecture_counterexamples;
}

InstanceRecord check_instance(const WeightedOrientedGraph& input, const SweepOptions& opt, SweepSummary& s) {
  const auto d = normalize_boundary_weights(input);
  InstanceRecord rec;
  rec.graph = render_graph(d);
  auto fail = [&](std::size_t& counter, const std::string& what) {
    ++counter;
    rec.failures.push_back(what);
  };

  OracleOptions oracle = opt.oracle_options;
  oracle.audit = &s.audit;
  ClassifyOptions copt;
  copt.oracle = opt.oracle;
  copt.oracle_options = oracle;
  copt.caps = opt.caps;
  const auto r = opt.spec.kind == InstanceSpec::Kind::Bipartite ? classify_bipartite(d, copt) : classify(d, copt);
  rec.graph_class = r.graph_class;
  rec.cm = r.cm;
  rec.unmixed = r.unmixed;
  rec.scm = r.scm;
  rec.oracle_cm = r.oracle_cm;
  rec.oracle_scm = r.oracle_scm;
  if (r.quotients) rec.quotients_linear = r.quotients->linear;
  if (r.cm == Verdict::Yes) ++s.cm_yes;

  for (const auto& what : r.disagreements) fail(s.disagreements, "oracle disagreement: " + what);
  for (const auto& what : r.property_violations) fail(s.property_violations, what);

  const bool leaf_matched = r.graph_class == GraphClass::Whiskered || r.graph_class == GraphClass::SingleViolation;
  if (leaf_matched) {
    const auto heights = is_unmixed(d, UnmixedMethod::Heights, opt.caps).unmixed;
    const bool tails = r.graph_class == GraphClass::Whiskered && r.cm == Verdict::Yes;
    if (heights != (r.unmixed == Verdict::Yes) || heights != tails)
      fail(s.unmixed_mismatches, "unmixed methods or tail weights disagree");
  }
  if (r.graph_class == GraphClass::Whiskered && r.cm == Verdict::Yes && !(r.quotients && r.quotients->linear))
    fail(s.quotient_failures, "tail weights hold but the dual ordering lacks linear quotients");
  if (r.graph_class == GraphClass::SingleViolation) {
    ++s.single_violation;
    if (!(r.quotients && r.quotients->linear))
      fail(s.quotient_failures, "single violation without dual linear quotients");
    if (opt.oracle) {
      auto scm = r.oracle_scm;
      if (!scm) scm = is_sequentially_cm(edge_ideal(d), oracle);
      rec.oracle_scm = scm;
      if (!*scm) fail(s.scm_failures, "single violation but the oracle finds no sequential CM");
    }
  }

  if (opt.cover_structure && (leaf_matched || find_leaf_perfect_matching(underlying_graph(d)))) {
    const auto cs = check_cover_structure(d, opt.caps.polarized_vertices);
    s.cover_checks += cs.checks;
    for (const auto& v : cs.violations) fail(s.cover_violations, "cover structure: " + v);
  }

  if (opt.duality) {
    const auto pol = polarize(edge_ideal(d)).ideal();
    if (alexander_dual(alexander_dual(pol, opt.caps.polarized_vertices), opt.caps.polarized_vertices) != pol)
      fail(s.duality_violations, "double Alexander dual differs from the polarization");
  }

  if (opt.prime_routes && d.vertex_count() <= opt.caps.strong_vertices) {
    if (associated_primes(d, PrimeMethod::StrongCovers, opt.caps) !=
        associated_primes(d, PrimeMethod::Depolarization, opt.caps))
      fail(s.route_mismatches, "associated primes differ between strong covers and depolarization");
  }

  if (r.graph_class == GraphClass::Bipartite) {
    if (opt.conjecture && opt.oracle) {
      const auto c = check_conjecture(d, oracle, opt.caps);
      rec.conjecture = to_string(c.outcome);
      switch (c.outcome) {
        case ConjectureOutcome::Pass: ++s.conjecture_pass; break;
        case ConjectureOutcome::Vacuous: ++s.conjecture_vacuous; break;
        case ConjectureOutcome::Counterexample:
          fail(s.conjecture_counterexamples, "unmixed with CM radical but not CM");
          break;
      }
    }
    if (opt.colon_displays && r.cm == Verdict::Yes && r.matching) {
      const auto cd = check_colon_displays(d, *r.matching);
      if (cd.applicable) ++s.colon_checked;
      for (const auto& v : cd.violations) fail(s.colon_violations, "colon display: " + v);
    }
  }

  if (opt.cross_field && r.oracle_cm) {
    OracleOptions other = oracle;
    other.field = *opt.cross_field;
    if (oracle_cm_monomial(edge_ideal(d), other) != *r.oracle_cm) ++s.field_differences;
  }
  return rec;
}

SweepSummary run_sweep(const SweepOptions& opt, const std::function<void(const InstanceRecord&)>& on_instance) {
  SweepSummary s;
  const auto start = std::chrono::steady_clock::now();
  for_each_instance(opt.spec, [&](const Instance& inst) {
    auto rec = check_instance(inst.graph, opt, s);
    rec.id = inst.id;
    ++s.instances;
    for (const auto& f : rec.failures)
      if (s.failure_samples.size() < opt.failure_samples)
        s.failure_samples.push_back("#" + std::to_string(inst.id) + ": " + f);
    if (on_instance) on_instance(rec);
    return true;
  });
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace wog
