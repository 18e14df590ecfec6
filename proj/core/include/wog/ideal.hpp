#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wog/graph.hpp"
#include "wog/monomial.hpp"

namespace wog {

/// A monomial ideal over a named, ordered variable registry. Generators are
/// kept minimal and in graded lexicographic order by registry index.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);

  std::span<const std::string> variables() const noexcept { return variables_; }
  const std::string& variable(VarIndex v) const { return variables_.at(v); }
  std::optional<VarIndex> find_variable(std::string_view name) const;
  VarIndex variable_index(std::string_view name) const;  // throws InputError

  std::span<const Monomial> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_squarefree() const noexcept;
  bool contains(const Monomial& m) const noexcept;
  Exponent max_exponent(VarIndex v) const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

/// Divisibility-minimal antichain in canonical order.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);
MonomialIdeal minimalize(std::vector<std::string> variables, std::vector<Monomial> gens);

/// Generators x_i * x_j^w(x_j) for every edge (x_i, x_j); one variable per
/// vertex in vertex order.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& d);

MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// Registry of the sum: the variables of `a`, then unseen variables of `b`.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// Adds the given variables as generators (`(I, v1, v2, ...)`).
MonomialIdeal add_variables(const MonomialIdeal& ideal, std::span<const VarIndex> vars);

/// Variables occurring in exactly one minimal generator.
std::vector<VarIndex> free_variables(const MonomialIdeal& ideal);
/// Multiplies the unique generator containing free variable `v` by v^m.
MonomialIdeal bump_free_variable(const MonomialIdeal& ideal, VarIndex v, Exponent m);

/// Renames registry entries; `names` must have one entry per variable.
MonomialIdeal rename_variables(const MonomialIdeal& ideal, std::vector<std::string> names);
/// Re-expresses the ideal over another registry containing every name used.
MonomialIdeal over_registry(const MonomialIdeal& ideal, std::vector<std::string> registry);

std::string render_monomial(const Monomial& m, std::span<const std::string> names);
/// One generator per line as name^e*name*...; exponent 1 is written bare.
std::string render_ideal(const MonomialIdeal& ideal);
Monomial parse_monomial(std::string_view text, std::vector<std::string>& registry, bool extend);
/// Registry defaults to first-appearance order; pass one to pin it.
MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::vector<std::string>> registry = std::nullopt);

}  // namespace wog
