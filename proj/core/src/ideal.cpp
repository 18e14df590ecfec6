#include "wog/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wog/error.hpp"

namespace wog {

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)) {
  for (const auto& g : generators)
    for (const auto& [v, e] : g.terms())
      if (v >= variables_.size()) throw InputError("generator uses a variable outside the registry");
  generators_ = minimal_generators(std::move(generators));
}

std::optional<VarIndex> MonomialIdeal::find_variable(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<VarIndex>(it - variables_.begin());
}

VarIndex MonomialIdeal::variable_index(std::string_view name) const {
  if (auto v = find_variable(name)) return *v;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

Exponent MonomialIdeal::max_exponent(VarIndex v) const noexcept {
  Exponent e = 0;
  for (const auto& g : generators_) e = std::max(e, g.exponent(v));
  return e;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), graded_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    // Degree-sorted input: any divisor of g precedes it.
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal minimalize(std::vector<std::string> variables, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(variables), std::move(gens));
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& d) {
  std::vector<Monomial> gens;
  gens.reserve(d.edges().size());
  for (const auto& e : d.edges())
    gens.push_back(Monomial({{e.from, 1}, {e.to, d.weight(e.to)}}));
  return MonomialIdeal({d.names().begin(), d.names().end()}, std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.support());
  return MonomialIdeal({ideal.variables().begin(), ideal.variables().end()}, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal({ideal.variables().begin(), ideal.variables().end()}, std::move(gens));
}

MonomialIdeal over_registry(const MonomialIdeal& ideal, std::vector<std::string> registry) {
  std::map<std::string, VarIndex, std::less<>> index;
  for (std::size_t i = 0; i < registry.size(); ++i) index.emplace(registry[i], static_cast<VarIndex>(i));
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& [v, e] : g.terms()) {
      auto it = index.find(ideal.variable(v));
      if (it == index.end()) throw InputError("variable '" + ideal.variable(v) + "' missing from registry");
      terms.emplace_back(it->second, e);
    }
    gens.emplace_back(std::move(terms));
  }
  return MonomialIdeal(std::move(registry), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<std::string> registry(a.variables().begin(), a.variables().end());
  for (const auto& name : b.variables())
    if (std::find(registry.begin(), registry.end(), name) == registry.end()) registry.push_back(name);
  auto lifted_a = over_registry(a, registry);
  auto lifted_b = over_registry(b, registry);
  std::vector<Monomial> gens(lifted_a.generators().begin(), lifted_a.generators().end());
  gens.insert(gens.end(), lifted_b.generators().begin(), lifted_b.generators().end());
  return MonomialIdeal(std::move(registry), std::move(gens));
}

MonomialIdeal add_variables(const MonomialIdeal& ideal, std::span<const VarIndex> vars) {
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  for (auto v : vars) {
    if (v >= ideal.variables().size()) throw InputError("variable index out of range");
    gens.push_back(Monomial::variable(v));
  }
  return MonomialIdeal({ideal.variables().begin(), ideal.variables().end()}, std::move(gens));
}

std::vector<VarIndex> free_variables(const MonomialIdeal& ideal) {
  std::vector<std::size_t> count(ideal.variables().size(), 0);
  for (const auto& g : ideal.generators())
    for (const auto& [v, e] : g.terms()) ++count[v];
  std::vector<VarIndex> out;
  for (VarIndex v = 0; v < count.size(); ++v)
    if (count[v] == 1) out.push_back(v);
  return out;
}

MonomialIdeal bump_free_variable(const MonomialIdeal& ideal, VarIndex v, Exponent m) {
  auto free = free_variables(ideal);
  if (!std::binary_search(free.begin(), free.end(), v)) {
    std::string name = v < ideal.variables().size() ? ideal.variable(v) : std::to_string(v);
    throw InputError("variable '" + name + "' is not free");
  }
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  for (auto& g : gens)
    if (g.contains(v)) g = g * Monomial::variable(v, m);
  return MonomialIdeal({ideal.variables().begin(), ideal.variables().end()}, std::move(gens));
}

MonomialIdeal rename_variables(const MonomialIdeal& ideal, std::vector<std::string> names) {
  if (names.size() != ideal.variables().size()) throw InputError("rename needs one name per variable");
  return MonomialIdeal(std::move(names), {ideal.generators().begin(), ideal.generators().end()});
}

std::string render_monomial(const Monomial& m, std::span<const std::string> names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.terms()) {
    if (!out.empty()) out += '*';
    out += names[v];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    out += render_monomial(g, ideal.variables());
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::vector<std::string>& registry, bool extend) {
  text = trim(text);
  if (text == "1") return Monomial();
  std::vector<Monomial::Term> terms;
  while (!text.empty()) {
    auto star = text.find('*');
    auto factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.empty()) throw InputError("empty factor in monomial");
    Exponent e = 1;
    auto caret = factor.find('^');
    std::string_view name = trim(factor.substr(0, caret));
    if (caret != std::string_view::npos) {
      auto digits = trim(factor.substr(caret + 1));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw InputError("bad exponent in '" + std::string(factor) + "'");
      e = std::stoull(std::string(digits));
      if (e == 0) throw InputError("exponent must be positive in '" + std::string(factor) + "'");
    }
    if (name.empty()) throw InputError("missing variable name");
    auto it = std::find(registry.begin(), registry.end(), name);
    if (it == registry.end()) {
      if (!extend) throw InputError("unknown variable '" + std::string(name) + "'");
      registry.emplace_back(name);
      it = registry.end() - 1;
    }
    terms.emplace_back(static_cast<VarIndex>(it - registry.begin()), e);
  }
  return Monomial(std::move(terms));
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::vector<std::string>> registry) {
  const bool extend = !registry.has_value();
  std::vector<std::string> vars = registry ? std::move(*registry) : std::vector<std::string>{};
  std::vector<Monomial> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto body = trim(line);
    if (body.empty()) continue;
    gens.push_back(parse_monomial(body, vars, extend));
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

}  // namespace wog
