#include "wog/polarization.hpp"

#include <algorithm>

#include "wog/error.hpp"

namespace wog {

std::string polarized_name(const std::string& base, std::uint32_t copy) {
  return base + "_" + std::to_string(copy);
}

PolarizedIdeal::PolarizedIdeal(MonomialIdeal ideal, MonomialIdeal origin,
                               std::vector<PolarizedVariable> variables,
                               std::vector<VarIndex> polarized_set)
    : ideal_(std::move(ideal)),
      origin_(std::move(origin)),
      variables_(std::move(variables)),
      polarized_set_(std::move(polarized_set)) {
  if (variables_.size() != ideal_.variables().size())
    throw Error("polarized registry and variable table differ in length");
  first_copy_.assign(origin_.variables().size(), static_cast<VarIndex>(-1));
  for (VarIndex i = 0; i < variables_.size(); ++i)
    if (variables_[i].copy == 1) first_copy_.at(variables_[i].base) = i;
}

std::optional<VarIndex> PolarizedIdeal::index_of(VarIndex base, std::uint32_t copy) const {
  if (base >= first_copy_.size() || copy == 0) return std::nullopt;
  const auto idx = first_copy_[base] + (copy - 1);
  if (idx >= variables_.size() || variables_[idx].base != base || variables_[idx].copy != copy)
    return std::nullopt;
  return idx;
}

std::uint32_t PolarizedIdeal::copies(VarIndex base) const {
  std::uint32_t n = 0;
  for (const auto& pv : variables_)
    if (pv.base == base) n = std::max(n, pv.copy);
  return n;
}

MonomialIdeal PolarizedIdeal::depolarize() const {
  std::vector<Monomial> gens;
  gens.reserve(ideal_.size());
  for (const auto& g : ideal_.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& [v, e] : g.terms()) terms.emplace_back(variables_[v].base, e);
    gens.emplace_back(std::move(terms));
  }
  return MonomialIdeal({origin_.variables().begin(), origin_.variables().end()}, std::move(gens));
}

namespace {

PolarizedIdeal polarize_subset(const MonomialIdeal& ideal, const std::vector<bool>& split) {
  const auto n = ideal.variables().size();
  std::vector<PolarizedVariable> table;
  std::vector<std::string> names;
  std::vector<VarIndex> first(n, 0);
  std::vector<VarIndex> polarized_set;
  for (VarIndex v = 0; v < n; ++v) {
    first[v] = static_cast<VarIndex>(table.size());
    if (split[v]) {
      polarized_set.push_back(v);
      const auto p = std::max<Exponent>(1, ideal.max_exponent(v));
      for (std::uint32_t j = 1; j <= p; ++j) {
        table.push_back({v, j});
        names.push_back(polarized_name(ideal.variable(v), j));
      }
    } else {
      table.push_back({v, 1});
      names.push_back(ideal.variable(v));
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& [v, e] : g.terms()) {
      if (split[v]) {
        for (Exponent j = 0; j < e; ++j) terms.emplace_back(first[v] + static_cast<VarIndex>(j), 1);
      } else {
        terms.emplace_back(first[v], e);
      }
    }
    gens.emplace_back(std::move(terms));
  }
  MonomialIdeal pol(std::move(names), std::move(gens));
  return PolarizedIdeal(std::move(pol), ideal, std::move(table), std::move(polarized_set));
}

}  // namespace

PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  return polarize_subset(ideal, std::vector<bool>(ideal.variables().size(), true));
}

PolarizedIdeal partial_polarize(const MonomialIdeal& ideal, std::span<const VarIndex> which) {
  std::vector<bool> split(ideal.variables().size(), false);
  for (auto v : which) {
    if (v >= split.size()) throw InputError("partial polarization variable out of range");
    split[v] = true;
  }
  return polarize_subset(ideal, split);
}

std::vector<VarIndex> depolarize_variable_set(const PolarizedIdeal& pol, std::span<const VarIndex> vars) {
  std::vector<VarIndex> out;
  out.reserve(vars.size());
  for (auto v : vars) out.push_back(pol.variable(v).base);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wog
