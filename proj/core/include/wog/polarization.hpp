#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wog/ideal.hpp"

namespace wog {

/// Copy `copy` (1-based) of original variable `base`.
struct PolarizedVariable {
  VarIndex base;
  std::uint32_t copy;
  auto operator<=>(const PolarizedVariable&) const = default;
};

/// Rendered as base name, underscore, copy index.
std::string polarized_name(const std::string& base, std::uint32_t copy);

class PolarizedIdeal {
 public:
  PolarizedIdeal(MonomialIdeal ideal, MonomialIdeal origin, std::vector<PolarizedVariable> variables,
                 std::vector<VarIndex> polarized_set);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const MonomialIdeal& origin() const noexcept { return origin_; }
  /// Parallel to ideal().variables(); base-major, copies contiguous.
  std::span<const PolarizedVariable> variables() const noexcept { return variables_; }
  const PolarizedVariable& variable(VarIndex v) const { return variables_.at(v); }
  std::span<const VarIndex> polarized_set() const noexcept { return polarized_set_; }

  /// Index of copy `copy` of `base`, if that copy exists.
  std::optional<VarIndex> index_of(VarIndex base, std::uint32_t copy) const;
  /// Number of copies of `base` in the registry.
  std::uint32_t copies(VarIndex base) const;

  /// Substitutes every copy by its base variable and minimalizes.
  MonomialIdeal depolarize() const;

 private:
  MonomialIdeal ideal_;
  MonomialIdeal origin_;
  std::vector<PolarizedVariable> variables_;
  std::vector<VarIndex> polarized_set_;
  std::vector<VarIndex> first_copy_;  // registry index of copy 1, per base
};

/// Full polarization. A variable absent from every generator keeps one copy
/// so the polarized ring still contains it.
PolarizedIdeal polarize(const MonomialIdeal& ideal);

/// Splits only the variables in `which`; the others keep their names and
/// full exponents.
PolarizedIdeal partial_polarize(const MonomialIdeal& ideal, std::span<const VarIndex> which);

/// Sorted, distinct base variables of a set of polarized variables.
std::vector<VarIndex> depolarize_variable_set(const PolarizedIdeal& pol, std::span<const VarIndex> vars);

}  // namespace wog
