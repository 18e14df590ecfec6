#include "wog_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <sstream>

#include "wog/classify.hpp"
#include "wog/covers.hpp"
#include "wog/error.hpp"
#include "wog/graph_io.hpp"
#include "wog/homology.hpp"
#include "wog/linear_quotients.hpp"
#include "wog/polarization.hpp"
#include "wog/sweep.hpp"

#ifndef WOG_VERSION
#define WOG_VERSION "unknown"
#endif

namespace wog::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string input;
  bool json = false;
  bool raw_weights = false;
  std::string field = "f2";
  std::size_t cap_vertices = CoverCaps{}.polarized_vertices;
  std::size_t cap_strong = CoverCaps{}.strong_vertices;
  std::size_t cap_faces = OracleOptions{}.face_cap;
  std::string expect;
  bool oracle = false;
  bool strong = false;
  std::string method;
};

struct SweepFlags {
  std::string kind;
  std::size_t base_max = 3;
  std::size_t side_max = 3;
  Weight weight_max = 2;
  std::uint64_t seed = 0;
  std::size_t count = 200;
  std::size_t vertices_max = 8;
  std::string log;
  std::string cross_field;
  bool no_dedupe = false;
};

struct Result {
  Json body = Json::object();
  int status = kOk;
  /// Printed instead of `body` in text mode: ideals in the ideal file format.
  std::string raw_text;
};

Json generator_lines(const MonomialIdeal& ideal) {
  Json a = Json::array();
  for (const auto& g : ideal.generators()) a.push_back(render_monomial(g, ideal.variables()));
  return a;
}

Result ideal_result(const char* key, const MonomialIdeal& ideal) {
  Result r;
  r.body[key] = generator_lines(ideal);
  r.body["generators"] = ideal.size();
  r.raw_text = "# " + std::string(key) + ", " + std::to_string(ideal.size()) + (ideal.size() == 1 ? " generator\n" : " generators\n") + render_ideal(ideal);
  return r;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_yes_no(const std::optional<bool>& b) { return b ? yes_no(*b) : "not run"; }

/// A path, `-` for stdin, or inline text with `;` separating directives.
std::string read_input(const std::string& input) {
  if (input.empty()) throw InputError("missing input graph");
  if (input == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream f(input);
    if (!f) throw InputError("cannot read '" + input + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }
  if (input.find(';') != std::string::npos || input.rfind("vertex ", 0) == 0 || input.rfind("edge ", 0) == 0) {
    std::string text = input;
    for (auto& c : text)
      if (c == ';') c = '\n';
    return text;
  }
  throw InputError("no such file '" + input + "'");
}

CoverCaps caps_of(const Common& c) { return {c.cap_vertices, c.cap_strong}; }

OracleOptions oracle_of(const Common& c) {
  OracleOptions o;
  o.field = Field::parse(c.field);
  o.face_cap = c.cap_faces;
  o.cover_cap = c.cap_vertices;
  return o;
}

Json set_list(const std::vector<VertexSet>& sets, std::span<const std::string> names) {
  Json a = Json::array();
  for (auto s : sets) a.push_back(render_set(s, names));
  return a;
}

std::string render_partition(const CoverPartition& p, const WeightedOrientedGraph& d) {
  const auto names = d.names();
  std::string s = render_set(p.cover, names) + "  L1=" + render_set(p.l1, names) + " L2=" + render_set(p.l2, names) +
                  " L3=" + render_set(p.l3, names) + (p.minimal ? "  minimal" : "  strong");
  for (const auto& e : p.certificates) s += "  " + d.name(e.from) + "->" + d.name(e.to);
  return s;
}

Result verb_ideal(const WeightedOrientedGraph& d) { return ideal_result("ideal", edge_ideal(d)); }

Result verb_polarize(const WeightedOrientedGraph& d) {
  const auto p = polarize(edge_ideal(d));
  auto r = ideal_result("polarization", p.ideal());
  r.body["variables"] = p.ideal().variables();
  return r;
}

Result verb_dual(const WeightedOrientedGraph& d, const Common& c) {
  return ideal_result("dual", alexander_dual(polarize(edge_ideal(d)).ideal(), c.cap_vertices));
}

Result verb_covers(const WeightedOrientedGraph& d, const Common& c) {
  Result r;
  if (c.strong) {
    Json a = Json::array();
    for (const auto& p : strong_vertex_covers(d, c.cap_strong)) a.push_back(render_partition(p, d));
    r.body["count"] = a.size();
    r.body["strong_covers"] = a;
  } else {
    const auto covers = minimal_vertex_covers(hypergraph_of(underlying_graph(d)), c.cap_vertices);
    r.body["count"] = covers.size();
    r.body["minimal_covers"] = set_list(covers, d.names());
  }
  return r;
}

Result verb_assoc(const WeightedOrientedGraph& d, const Common& c) {
  PrimeMethod m = PrimeMethod::StrongCovers;
  if (c.method == "depolarization") m = PrimeMethod::Depolarization;
  else if (!c.method.empty() && c.method != "strong") throw InputError("unknown method '" + c.method + "'");
  Result r;
  const auto primes = associated_primes(d, m, caps_of(c));
  r.body["method"] = m == PrimeMethod::StrongCovers ? "strong" : "depolarization";
  r.body["count"] = primes.size();
  r.body["primes"] = set_list(primes, d.names());
  return r;
}

Result verb_unmixed(const WeightedOrientedGraph& d, const Common& c) {
  UnmixedMethod m = UnmixedMethod::StrongL3;
  if (c.method == "heights") m = UnmixedMethod::Heights;
  else if (!c.method.empty() && c.method != "strong-l3") throw InputError("unknown method '" + c.method + "'");
  Result r;
  const auto u = is_unmixed(d, m, caps_of(c));
  const auto names = d.names();
  r.body["method"] = m == UnmixedMethod::StrongL3 ? "strong-l3" : "heights";
  r.body["unmixed"] = yes_no(u.unmixed);
  if (u.cover) {
    r.body["certificate"] = render_set(u.cover->cover, names);
    r.body["l3"] = render_set(u.cover->l3, names);
  }
  if (u.graph_covers)
    r.body["certificate"] = render_set(u.graph_covers->first, names) + " vs " + render_set(u.graph_covers->second, names);
  if (u.primes) r.body["certificate"] = render_set(u.primes->first, names) + " vs " + render_set(u.primes->second, names);
  return r;
}

Result verb_classify(const WeightedOrientedGraph& d, const Common& c) {
  ClassifyOptions opt;
  opt.oracle = c.oracle;
  opt.oracle_options = oracle_of(c);
  opt.caps = caps_of(c);
  const auto rep = classify(d, opt);
  Result r;
  r.body["class"] = to_string(rep.graph_class);
  r.body["cm"] = to_string(rep.cm);
  r.body["unmixed"] = to_string(rep.unmixed);
  r.body["scm"] = to_string(rep.scm);
  Json conds = Json::array();
  for (const auto& s : rep.conditions)
    conds.push_back(s.label + ": " + (s.pass ? "pass" : "fail") + (s.witness.empty() ? "" : " (" + s.witness + ")"));
  r.body["conditions"] = conds;
  if (rep.matching) {
    std::string m;
    for (const auto& [x, y] : rep.matching->pairs) m += (m.empty() ? "" : ", ") + d.name(x) + "/" + d.name(y);
    r.body["matching"] = m;
  }
  if (rep.quotients) {
    r.body["dual_linear_quotients"] = yes_no(rep.quotients->linear);
    if (rep.quotients->first_failure) r.body["first_quotient_failure"] = *rep.quotients->first_failure;
  }
  if (rep.oracle_checked) {
    r.body["oracle_field"] = rep.oracle_field.name();
    r.body["oracle_cm"] = opt_yes_no(rep.oracle_cm);
    if (rep.oracle_scm) r.body["oracle_scm"] = yes_no(*rep.oracle_scm);
    r.body["oracle"] = rep.disagreements.empty() ? "agree" : "disagree";
  }
  if (!rep.disagreements.empty()) r.body["disagreements"] = rep.disagreements;
  if (!rep.property_violations.empty()) r.body["property_violations"] = rep.property_violations;
  if (!rep.disagreements.empty() || !rep.property_violations.empty()) r.status = kPropertyViolation;
  return r;
}

Result verb_scm(const WeightedOrientedGraph& d, const Common& c) {
  Result r;
  const auto oracle = oracle_of(c);
  std::optional<DualOrdering> ord;
  std::string route;
  const auto m = find_leaf_perfect_matching(underlying_graph(d));
  if (m && tail_weight_violations(d, *m).size() <= 1) {
    ord = canonical_dual_ordering(d, std::nullopt, c.cap_vertices);
    route = "canonical";
  } else {
    ord = search_linear_quotients(alexander_dual(polarize(edge_ideal(d)).ideal(), c.cap_vertices));
    route = "search";
  }
  r.body["ordering"] = route;
  bool linear = false;
  if (ord) {
    const auto q = verify_linear_quotients(*ord);
    linear = q.linear;
    r.body["dual_linear_quotients"] = yes_no(q.linear);
    if (q.first_failure) {
      const auto& step = q.steps[*q.first_failure];
      r.body["first_quotient_failure"] = *q.first_failure;
      if (step.obstruction) r.body["obstruction"] = render_monomial(*step.obstruction, ord->variables);
    }
  } else {
    r.body["dual_linear_quotients"] = "no ordering";
  }
  const bool scm = is_sequentially_cm(edge_ideal(d), oracle);
  r.body["oracle_field"] = oracle.field.name();
  r.body["oracle_scm"] = yes_no(scm);
  if (linear && !scm) r.status = kPropertyViolation;
  return r;
}

Result verb_oracle(const WeightedOrientedGraph& d, const Common& c) {
  Result r;
  OracleAudit audit;
  auto opt = oracle_of(c);
  opt.audit = &audit;
  const auto ideal = edge_ideal(d);
  const auto pol = polarize(ideal).ideal();
  const auto complex = stanley_reisner(pol, c.cap_vertices);
  const auto profile = reduced_homology(complex, opt);
  const bool cm = oracle_cm_monomial(ideal, opt);
  const auto dim = krull_dimension(ideal, c.cap_vertices);
  const auto depth = depth_skeleton(ideal, opt);
  r.body["field"] = opt.field.name();
  r.body["facets"] = complex.facets.size();
  r.body["homology"] = profile.ranks;
  r.body["cm"] = yes_no(cm);
  r.body["scm"] = yes_no(is_sequentially_cm(ideal, opt));
  r.body["dimension"] = dim;
  r.body["depth"] = depth;
  r.body["audit"] = audit.clean() ? "clean" : "violations";
  if (!audit.clean() || depth > dim || (cm && depth != dim)) r.status = kPropertyViolation;
  return r;
}

Result verb_conjecture(const WeightedOrientedGraph& d, const Common& c) {
  Result r;
  const auto rep = check_conjecture(d, oracle_of(c), caps_of(c));
  r.body["outcome"] = to_string(rep.outcome);
  r.body["unmixed"] = yes_no(rep.unmixed);
  r.body["radical_cm"] = yes_no(rep.radical_cm);
  if (rep.outcome != ConjectureOutcome::Vacuous) r.body["cm"] = yes_no(rep.cm);
  if (rep.outcome == ConjectureOutcome::Counterexample) r.status = kPropertyViolation;
  return r;
}

Json record_json(const InstanceRecord& rec) {
  Json j;
  j["id"] = rec.id;
  j["graph"] = rec.graph;
  j["class"] = to_string(rec.graph_class);
  j["cm"] = to_string(rec.cm);
  j["unmixed"] = to_string(rec.unmixed);
  j["scm"] = to_string(rec.scm);
  if (rec.oracle_cm) j["oracle_cm"] = *rec.oracle_cm;
  if (rec.oracle_scm) j["oracle_scm"] = *rec.oracle_scm;
  if (rec.quotients_linear) j["dual_linear_quotients"] = *rec.quotients_linear;
  if (rec.conjecture) j["conjecture"] = *rec.conjecture;
  j["failures"] = rec.failures;
  return j;
}

Result verb_sweep(const Common& c, const SweepFlags& f) {
  SweepOptions opt;
  opt.spec.kind = parse_instance_kind(f.kind);
  opt.spec.base_max = f.base_max;
  opt.spec.side_max = f.side_max;
  opt.spec.weight_max = f.weight_max;
  opt.spec.seed = f.seed;
  opt.spec.count = f.count;
  opt.spec.vertices_max = f.vertices_max;
  opt.spec.normalize = !c.raw_weights;
  opt.spec.dedupe = !f.no_dedupe;
  opt.oracle = c.oracle;
  opt.oracle_options = oracle_of(c);
  opt.caps = caps_of(c);
  if (!f.cross_field.empty()) opt.cross_field = Field::parse(f.cross_field);

  std::ofstream log;
  if (!f.log.empty()) {
    log.open(f.log);
    if (!log) throw InputError("cannot write log '" + f.log + "'");
  }
  const auto s = run_sweep(opt, [&](const InstanceRecord& rec) {
    if (log) log << record_json(rec).dump() << '\n';
  });

  Result r;
  auto& b = r.body;
  b["class"] = f.kind;
  b["instances"] = s.instances;
  b["oracle"] = c.oracle ? opt.oracle_options.field.name() : "off";
  b["disagreements"] = s.disagreements;
  b["unmixed_mismatches"] = s.unmixed_mismatches;
  b["quotient_failures"] = s.quotient_failures;
  b["single_violation_instances"] = s.single_violation;
  b["scm_failures"] = s.scm_failures;
  b["cover_checks"] = s.cover_checks;
  b["cover_violations"] = s.cover_violations;
  b["duality_violations"] = s.duality_violations;
  b["route_mismatches"] = s.route_mismatches;
  b["property_violations"] = s.property_violations;
  b["colon_checked"] = s.colon_checked;
  b["colon_violations"] = s.colon_violations;
  b["conjecture_pass"] = s.conjecture_pass;
  b["conjecture_vacuous"] = s.conjecture_vacuous;
  b["conjecture_counterexamples"] = s.conjecture_counterexamples;
  b["cm_instances"] = s.cm_yes;
  if (opt.cross_field) b["field_differences"] = s.field_differences;
  b["oracle_complexes"] = s.audit.complexes;
  b["oracle_audit"] = s.audit.clean() ? "clean" : "violations";
  b["seconds"] = s.seconds;
  if (!s.failure_samples.empty()) b["failure_samples"] = s.failure_samples;
  if (!s.ok()) r.status = kPropertyViolation;
  return r;
}

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : "; ") + text_value(e);
    return s;
  }
  if (v.is_number_float()) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << v.get<double>();
    return o.str();
  }
  return v.dump();
}

void print_text(const Json& body, std::ostream& out) {
  for (const auto& [key, v] : body.items()) {
    if (v.is_array() && !v.empty() && v.front().is_string()) {
      out << key << ":\n";
      for (const auto& e : v) out << "  " << e.get<std::string>() << '\n';
    } else {
      out << key << ": " << text_value(v) << '\n';
    }
  }
}

/// `key = value` lines; every key must be present with that text value.
std::vector<std::string> check_expectations(const std::string& path, const Json& body) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read expectation file '" + path + "'");
  std::vector<std::string> mismatches;
  std::string line;
  std::size_t n = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
  };
  while (std::getline(f, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ": line " + std::to_string(n) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto want = trim(line.substr(eq + 1));
    if (!body.contains(key)) {
      mismatches.push_back(key + ": missing, expected '" + want + "'");
      continue;
    }
    const auto got = text_value(body[key]);
    if (got != want) mismatches.push_back(key + ": got '" + got + "', expected '" + want + "'");
  }
  return mismatches;
}

void add_common(CLI::App* cmd, Common& c, bool with_input) {
  if (with_input) cmd->add_option("input", c.input, "graph file, '-' for stdin, or inline text with ';'")->required();
  cmd->add_flag("--json", c.json, "emit one JSON record");
  cmd->add_flag("--raw-weights", c.raw_weights, "keep source and sink weights as written");
  cmd->add_option("--field", c.field, "oracle field: q, f2 or f<p>");
  cmd->add_option("--cap-vertices", c.cap_vertices, "largest polarized vertex count for cover enumeration");
  cmd->add_option("--cap-strong", c.cap_strong, "largest vertex count for strong cover enumeration");
  cmd->add_option("--cap-faces", c.cap_faces, "largest face count for homology");
  cmd->add_option("--expect", c.expect, "file of 'key = value' lines the report must match");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay tests for edge ideals of weighted oriented graphs", "wog"};
  app.require_subcommand(1);
  app.set_version_flag("--version", WOG_VERSION);
  Common c;
  SweepFlags sw;

  const std::map<std::string, std::string> verbs = {
      {"ideal", "print the edge ideal"},
      {"polarize", "print the polarized edge ideal"},
      {"dual", "print the Alexander dual of the polarization"},
      {"covers", "print minimal vertex covers, or strong covers with L1/L2/L3"},
      {"assoc", "print associated primes"},
      {"unmixed", "decide unmixedness with a certificate"},
      {"classify", "run the class-specific test"},
      {"scm", "dual linear quotients and the sequential CM oracle"},
      {"oracle", "homology oracle: CM, sequential CM, depth, dimension"},
      {"conjecture", "unmixed with CM radical implies CM"},
  };
  for (const auto& [name, help] : verbs) {
    auto* cmd = app.add_subcommand(name, help);
    add_common(cmd, c, true);
    if (name == "covers") cmd->add_flag("--strong", c.strong, "list strong covers");
    if (name == "assoc") cmd->add_option("--method", c.method, "strong or depolarization");
    if (name == "unmixed") cmd->add_option("--method", c.method, "strong-l3 or heights");
    if (name == "classify") cmd->add_flag("--oracle", c.oracle, "cross-check with the homology oracle");
  }
  auto* sweep = app.add_subcommand("sweep", "run an exhaustive or random harness");
  add_common(sweep, c, false);
  sweep->add_option("--class", sw.kind, "whiskered, bipartite or random")->required();
  sweep->add_flag("--oracle", c.oracle, "compare against the homology oracle");
  sweep->add_option("--base-max", sw.base_max, "whiskered: largest base graph");
  sweep->add_option("--side-max", sw.side_max, "bipartite: largest side");
  sweep->add_option("--weight-max", sw.weight_max, "largest vertex weight");
  sweep->add_option("--seed", sw.seed, "random: generator seed");
  sweep->add_option("--count", sw.count, "random: instance count");
  sweep->add_option("--vertices-max", sw.vertices_max, "random: largest vertex count");
  sweep->add_option("--log", sw.log, "write one JSON line per instance");
  sweep->add_option("--cross-field", sw.cross_field, "count CM differences against a second field");
  sweep->add_flag("--no-dedupe", sw.no_dedupe, "keep isomorphic copies");

  std::vector<const char*> argv{"wog"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << WOG_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto* chosen = app.get_subcommands().front();
  const std::string verb = chosen->get_name();

  try {
    Result r;
    std::string hashed;
    if (verb == "sweep") {
      r = verb_sweep(c, sw);
      hashed = sw.kind + "/" + std::to_string(sw.base_max) + "/" + std::to_string(sw.side_max) + "/" +
               std::to_string(sw.weight_max) + "/" + std::to_string(sw.seed) + "/" + std::to_string(sw.count);
    } else {
      hashed = read_input(c.input);
      const auto parsed = parse_graph(hashed, c.raw_weights);
      for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
      const auto& d = parsed.graph;
      if (verb == "ideal") r = verb_ideal(d);
      else if (verb == "polarize") r = verb_polarize(d);
      else if (verb == "dual") r = verb_dual(d, c);
      else if (verb == "covers") r = verb_covers(d, c);
      else if (verb == "assoc") r = verb_assoc(d, c);
      else if (verb == "unmixed") r = verb_unmixed(d, c);
      else if (verb == "classify") r = verb_classify(d, c);
      else if (verb == "scm") r = verb_scm(d, c);
      else if (verb == "oracle") r = verb_oracle(d, c);
      else r = verb_conjecture(d, c);
    }
    if (!c.expect.empty()) {
      const auto mismatches = check_expectations(c.expect, r.body);
      for (const auto& m : mismatches) err << "expectation failed: " << m << '\n';
      if (!mismatches.empty()) r.status = kPropertyViolation;
    }
    if (c.json) {
      Json record;
      record["tool"] = "wog";
      record["version"] = WOG_VERSION;
      record["verb"] = verb;
      if (verb != "sweep") record["input"] = c.input;
      record["input_hash"] = "fnv1a:" + hex(fnv1a(hashed));
      record["options"] = {{"field", c.field},           {"oracle", c.oracle},
                           {"raw_weights", c.raw_weights}, {"method", c.method},
                           {"strong", c.strong},         {"cap_vertices", c.cap_vertices},
                           {"cap_strong", c.cap_strong}, {"cap_faces", c.cap_faces}};
      record["result"] = r.body;
      record["status"] = r.status;
      out << record.dump(2) << '\n';
    } else if (!r.raw_text.empty()) {
      out << r.raw_text;
    } else {
      print_text(r.body, out);
    }
    return r.status;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise it with the matching --cap-* flag)\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace wog::cli
