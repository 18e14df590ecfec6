#include "wog/classify.hpp"

#include <algorithm>
#include <functional>

#include "wog/error.hpp"
#include "wog/polarization.hpp"

namespace wog {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Whiskered: return "whiskered";
    case GraphClass::SingleViolation: return "single-violation";
    case GraphClass::Bipartite: return "bipartite";
    case GraphClass::Uncovered: return "uncovered";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(ConjectureOutcome o) {
  switch (o) {
    case ConjectureOutcome::Pass: return "pass";
    case ConjectureOutcome::Counterexample: return "counterexample";
    case ConjectureOutcome::Vacuous: return "vacuous";
  }
  return "?";
}

const ConditionStatus* ClassificationReport::condition(const std::string& label) const {
  for (const auto& c : conditions)
    if (c.label == label) return &c;
  return nullptr;
}

namespace {

Verdict from_bool(bool b) { return b ? Verdict::Yes : Verdict::No; }

std::string edge_text(const WeightedOrientedGraph& d, VertexId from, VertexId to) {
  return d.name(from) + " -> " + d.name(to);
}

void compare(ClassificationReport& r, const char* what, Verdict verdict, bool oracle) {
  if (verdict == Verdict::Unknown) return;
  if ((verdict == Verdict::Yes) != oracle)
    r.disagreements.push_back(std::string(what) + ": verdict " + to_string(verdict) + ", oracle " +
                              (oracle ? "yes" : "no"));
}

void run_oracle(ClassificationReport& r, const WeightedOrientedGraph& for_cm, const WeightedOrientedGraph& for_scm,
                const ClassifyOptions& opt) {
  r.oracle_checked = true;
  r.oracle_field = opt.oracle_options.field;
  r.oracle_cm = oracle_cm_monomial(edge_ideal(for_cm), opt.oracle_options);
  compare(r, "cm", r.cm, *r.oracle_cm);
  if (r.scm == Verdict::Yes && !*r.oracle_cm) {
    r.oracle_scm = is_sequentially_cm(edge_ideal(for_scm), opt.oracle_options);
    compare(r, "scm", r.scm, *r.oracle_scm);
  }
}

std::string unmixed_witness(const WeightedOrientedGraph& d, const UnmixedReport& u) {
  const auto names = d.names();
  if (u.cover)
    return "strong cover " + render_set(u.cover->cover, names) + " with L3 = " + render_set(u.cover->l3, names);
  if (u.graph_covers)
    return "minimal covers " + render_set(u.graph_covers->first, names) + " and " +
           render_set(u.graph_covers->second, names) + " of different sizes";
  if (u.primes)
    return "primes " + render_set(u.primes->first, names) + " and " + render_set(u.primes->second, names);
  return {};
}

bool has_perfect_matching(const UndirectedGraph& g, const Bipartition& sides) {
  if (sides.side_x.size() != sides.side_y.size()) return false;
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> match(g.vertex_count(), kNone);
  std::vector<bool> seen;
  std::function<bool(VertexId)> augment = [&](VertexId x) {
    for (auto y : g.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      if (match[y] == kNone || augment(match[y])) {
        match[y] = x;
        return true;
      }
    }
    return false;
  };
  for (auto x : sides.side_x) {
    seen.assign(g.vertex_count(), false);
    if (!augment(x)) return false;
  }
  return true;
}

}  // namespace

ClassificationReport classify_whiskered(const WeightedOrientedGraph& input, const ClassifyOptions& opt) {
  const auto d = normalize_boundary_weights(input);
  ClassificationReport r;
  auto m = find_leaf_perfect_matching(underlying_graph(d));
  if (!m) {
    r.conditions.push_back({"leaf perfect matching", false, "none"});
    if (opt.oracle) run_oracle(r, d, d, opt);
    return r;
  }
  r.graph_class = GraphClass::Whiskered;
  r.matching = m;
  const auto bad = tail_weight_violations(d, *m);
  ConditionStatus c{"(c) tail weights", bad.empty(), {}};
  for (const auto& [x, y] : bad) {
    if (!c.witness.empty()) c.witness += "; ";
    c.witness += edge_text(d, x, y) + " with weight(" + d.name(x) + ") = " + std::to_string(d.weight(x));
  }
  r.conditions.push_back(c);
  r.cm = from_bool(bad.empty());

  const auto u = is_unmixed(d, UnmixedMethod::StrongL3, opt.caps);
  r.conditions.push_back({"(b) unmixed", u.unmixed, unmixed_witness(d, u)});
  r.unmixed = from_bool(u.unmixed);
  if (u.unmixed != bad.empty())
    r.property_violations.push_back("unmixed verdict " + to_string(r.unmixed) + " but tail weights " +
                                    (bad.empty() ? "pass" : "fail"));

  r.scm = bad.size() <= 1 ? Verdict::Yes : Verdict::Unknown;

  if (opt.quotients && bad.size() <= 1) {
    auto rep = verify_linear_quotients(canonical_dual_ordering(d, std::nullopt, opt.caps.polarized_vertices));
    ConditionStatus q{"(d) dual linear quotients", rep.linear, {}};
    if (!rep.linear) {
      q.witness = "first failure at position " + std::to_string(*rep.first_failure + 1);
      r.property_violations.push_back("dual ordering lacks linear quotients");
    }
    if (bad.empty() && !rep.pure) r.property_violations.push_back("dual of an unmixed ideal is not pure");
    r.conditions.push_back(q);
    r.quotients = std::move(rep);
  }

  if (opt.oracle) {
    // Leaf weights only bump free variables, so they cannot change depth.
    auto reduced = d;
    for (const auto& [x, y] : m->pairs) reduced = reduced.with_weight(y, 1);
    run_oracle(r, reduced, d, opt);
  }
  return r;
}

ClassificationReport classify_single_violation(const WeightedOrientedGraph& input, const ClassifyOptions& opt) {
  const auto d = normalize_boundary_weights(input);
  auto m = find_leaf_perfect_matching(underlying_graph(d));
  const std::size_t count = m ? tail_weight_violations(d, *m).size() : 0;
  if (!m || count != 1) {
    ClassificationReport r;
    r.conditions.push_back({"single tail-weight violation", false,
                            m ? std::to_string(count) + " violations" : "no leaf perfect matching"});
    if (opt.oracle) run_oracle(r, d, d, opt);
    return r;
  }
  auto r = classify_whiskered(d, opt);
  r.graph_class = GraphClass::SingleViolation;
  return r;
}

std::vector<ConditionStatus> bipartite_weight_conditions(const WeightedOrientedGraph& d, const LeafMatching& m) {
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> partner(d.vertex_count(), kNone);
  for (const auto& [x, y] : m.pairs) {
    partner.at(x) = y;
    partner.at(y) = x;
  }
  auto check = [&](const char* label, bool y_side) {
    ConditionStatus st{label, true, {}};
    auto fail = [&](const std::string& w) {
      st.pass = false;
      if (!st.witness.empty()) st.witness += "; ";
      st.witness += w;
    };
    for (const auto& pair : m.pairs) {
      const VertexId heavy = y_side ? pair.second : pair.first;
      if (d.weight(heavy) < 2) continue;
      const auto out = d.out_neighbors(heavy);
      for (auto target : out) {
        const auto mate = partner[target];
        for (auto w : d.out_neighbors(mate))
          if (std::find(out.begin(), out.end(), w) == out.end())
            fail(d.name(w) + " adjacent to " + d.name(mate) + " but not an out-neighbour of " + d.name(heavy));
        for (auto w : d.in_neighbors(mate)) {
          if (std::find(out.begin(), out.end(), w) == out.end())
            fail(d.name(w) + " adjacent to " + d.name(mate) + " but not an out-neighbour of " + d.name(heavy));
          if (d.weight(w) != 1)
            fail(d.name(w) + " -> " + d.name(mate) + " has weight(" + d.name(w) + ") = " + std::to_string(d.weight(w)));
        }
      }
    }
    return st;
  };
  return {check("(d) heavy y out-neighbourhoods", true), check("(e) heavy x out-neighbourhoods", false)};
}

ClassificationReport classify_bipartite(const WeightedOrientedGraph& input, const ClassifyOptions& opt) {
  const auto d = normalize_boundary_weights(input);
  const auto g = underlying_graph(d);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw InputError("vertex '" + d.name(v) + "' is isolated");
  const auto sides = find_bipartition(g);
  if (!sides) throw InputError("graph is not bipartite");

  ClassificationReport r;
  r.graph_class = GraphClass::Bipartite;
  const bool perfect = has_perfect_matching(g, *sides);
  r.conditions.push_back({"(a) perfect matching", perfect, perfect ? "" : "no perfect matching"});
  const auto orders = perfect ? all_cm_matching_orders(g, *sides) : std::vector<LeafMatching>{};
  r.conditions.push_back(
      {"(b)-(c) matching order", !orders.empty(), orders.empty() && perfect ? "no perfect matching admits one" : ""});
  if (!perfect) r.conditions.back().witness = "no perfect matching";

  std::vector<ConditionStatus> weight_status;
  for (const auto& o : orders) {
    auto st = bipartite_weight_conditions(d, o);
    const bool ok = std::all_of(st.begin(), st.end(), [](const auto& s) { return s.pass; });
    if (ok || weight_status.empty()) {
      weight_status = st;
      r.matching = o;
    }
    if (ok) break;
  }
  if (weight_status.empty()) {
    weight_status = {{"(d) heavy y out-neighbourhoods", false, "no ordered matching to test"},
                     {"(e) heavy x out-neighbourhoods", false, "no ordered matching to test"}};
  }
  for (auto& s : weight_status) r.conditions.push_back(s);
  const bool cm = std::all_of(r.conditions.begin(), r.conditions.end(), [](const auto& s) { return s.pass; });
  r.cm = from_bool(cm);
  r.scm = cm ? Verdict::Yes : Verdict::Unknown;
  r.unmixed = from_bool(is_unmixed(d, UnmixedMethod::Heights, opt.caps).unmixed);

  if (cm) {
    for (const auto& [x, y] : r.matching->pairs) {
      const VertexId tail = d.has_edge(x, y) ? x : y;
      if (d.weight(tail) != 1)
        r.property_violations.push_back("matched edge tail " + d.name(tail) + " has weight " +
                                        std::to_string(d.weight(tail)));
    }
    if (r.unmixed != Verdict::Yes) r.property_violations.push_back("CM verdict on a mixed ideal");
  }
  if (opt.oracle) run_oracle(r, d, d, opt);
  return r;
}

ClassificationReport classify(const WeightedOrientedGraph& input, const ClassifyOptions& opt) {
  const auto d = normalize_boundary_weights(input);
  const auto g = underlying_graph(d);
  if (auto m = find_leaf_perfect_matching(g)) {
    if (tail_weight_violations(d, *m).size() == 1) return classify_single_violation(d, opt);
    return classify_whiskered(d, opt);
  }
  bool isolated = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) isolated = isolated || g.degree(v) == 0;
  if (!isolated && find_bipartition(g)) return classify_bipartite(d, opt);
  ClassificationReport r;
  if (opt.oracle) {
    run_oracle(r, d, d, opt);
    r.scm = Verdict::Unknown;
    r.oracle_scm = is_sequentially_cm(edge_ideal(d), opt.oracle_options);
  }
  r.unmixed = from_bool(is_unmixed(d, UnmixedMethod::Heights, opt.caps).unmixed);
  return r;
}

ConjectureReport check_conjecture(const WeightedOrientedGraph& input, const OracleOptions& opt,
                                  const CoverCaps& caps) {
  const auto d = normalize_boundary_weights(input);
  ConjectureReport r;
  const auto ideal = edge_ideal(d);
  r.unmixed = is_unmixed(d, UnmixedMethod::Heights, caps).unmixed;
  r.radical_cm = is_cm_reisner(radical(ideal), opt);
  if (!(r.unmixed && r.radical_cm)) {
    r.outcome = ConjectureOutcome::Vacuous;
    return r;
  }
  r.cm = oracle_cm_monomial(ideal, opt);
  r.outcome = r.cm ? ConjectureOutcome::Pass : ConjectureOutcome::Counterexample;
  return r;
}

ArtinianWitness artinian_witness(const WeightedOrientedGraph& d) {
  const auto m = find_leaf_perfect_matching(underlying_graph(d));
  if (!m) throw InputError("graph has no leaf perfect matching");
  const auto r = m->pairs.size();
  std::vector<VertexId> pair_of(d.vertex_count(), 0);
  std::vector<std::string> z;
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < r; ++i) {
    const auto x = m->pairs[i].first;
    pair_of[x] = static_cast<VertexId>(i);
    z.push_back("z" + std::to_string(i + 1));
    gens.push_back(Monomial::variable(static_cast<VarIndex>(i), d.weight(x) + 1));
  }
  for (const auto& e : d.edges()) {
    const bool from_x = std::any_of(m->pairs.begin(), m->pairs.end(), [&](auto& p) { return p.first == e.from; });
    const bool to_x = std::any_of(m->pairs.begin(), m->pairs.end(), [&](auto& p) { return p.first == e.to; });
    if (from_x && to_x)
      gens.push_back(Monomial({{pair_of[e.from], 1}, {pair_of[e.to], d.weight(e.to)}}));
  }
  ArtinianWitness w;
  w.j = MonomialIdeal(z, std::move(gens));
  const auto jpol = polarize(w.j);
  std::vector<std::string> names;
  for (const auto& pv : jpol.variables()) {
    const auto [x, y] = m->pairs[pv.base];
    names.push_back(pv.copy <= d.weight(x) ? polarized_name(d.name(x), pv.copy) : polarized_name(d.name(y), 1));
  }
  w.target = polarize(edge_ideal(d)).ideal();
  w.renamed_polarization = rename_variables(jpol.ideal(), names);
  try {
    w.renamed_polarization = over_registry(w.renamed_polarization, {w.target.variables().begin(), w.target.variables().end()});
    w.matches = w.renamed_polarization == w.target;
  } catch (const InputError&) {
    w.matches = false;
  }
  return w;
}

}  // namespace wog
