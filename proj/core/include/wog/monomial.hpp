#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wog {

using VarIndex = std::uint32_t;
using Exponent = std::uint64_t;

/// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
/// never storing a zero exponent. The empty monomial is 1.
class Monomial {
 public:
  using Term = std::pair<VarIndex, Exponent>;

  Monomial() = default;
  explicit Monomial(std::vector<Term> terms);

  static Monomial variable(VarIndex v, Exponent e = 1);
  static Monomial squarefree(std::span<const VarIndex> vars);

  std::span<const Term> terms() const noexcept { return terms_; }
  Exponent exponent(VarIndex v) const noexcept;
  Exponent degree() const noexcept;
  bool is_one() const noexcept { return terms_.empty(); }
  bool is_squarefree() const noexcept;
  bool contains(VarIndex v) const noexcept { return exponent(v) > 0; }
  std::vector<VarIndex> support_vars() const;

  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial support() const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / gcd(this, m): the generator of (this) : m.
  Monomial colon(const Monomial& m) const;
  /// Exact division; `d` must divide this.
  Monomial divide(const Monomial& d) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Term> terms_;
};

/// Graded lexicographic order with variable 0 the largest: lower degree
/// first, then larger exponent at the first differing variable first.
bool graded_lex_less(const Monomial& a, const Monomial& b) noexcept;

}  // namespace wog
