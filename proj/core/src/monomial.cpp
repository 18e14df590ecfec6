#include "wog/monomial.hpp"

#include <algorithm>

#include "wog/error.hpp"

namespace wog {

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  for (const auto& [v, e] : terms) {
    if (e == 0) continue;
    if (!terms_.empty() && terms_.back().first == v)
      terms_.back().second += e;
    else
      terms_.emplace_back(v, e);
  }
}

Monomial Monomial::variable(VarIndex v, Exponent e) { return Monomial({{v, e}}); }

Monomial Monomial::squarefree(std::span<const VarIndex> vars) {
  std::vector<Term> t;
  t.reserve(vars.size());
  for (auto v : vars) t.emplace_back(v, 1);
  Monomial m(std::move(t));
  for (auto& term : m.terms_) term.second = 1;
  return m;
}

Exponent Monomial::exponent(VarIndex v) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, VarIndex x) { return t.first < x; });
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

Exponent Monomial::degree() const noexcept {
  Exponent d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

std::vector<VarIndex> Monomial::support_vars() const {
  std::vector<VarIndex> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.terms_.begin();
  for (const auto& [v, e] : terms_) {
    while (it != other.terms_.end() && it->first < v) ++it;
    if (it == other.terms_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Term> t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return Monomial(std::move(t));
}

Monomial Monomial::support() const {
  Monomial m = *this;
  for (auto& t : m.terms_) t.second = 1;
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      m.terms_.emplace_back(a->first, std::min(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      m.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      m.terms_.push_back(*b++);
    } else {
      m.terms_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return m;
}

Monomial Monomial::colon(const Monomial& m) const {
  Monomial out;
  auto b = m.terms_.begin();
  for (const auto& [v, e] : terms_) {
    while (b != m.terms_.end() && b->first < v) ++b;
    Exponent sub = (b != m.terms_.end() && b->first == v) ? std::min(e, b->second) : 0;
    if (e > sub) out.terms_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial Monomial::divide(const Monomial& d) const {
  if (!d.divides(*this)) throw Error("monomial division is not exact");
  return colon(d);
}

bool graded_lex_less(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0;
  for (; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i] == tb[i]) continue;
    if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first;
    return ta[i].second > tb[i].second;
  }
  return false;
}

}  // namespace wog
