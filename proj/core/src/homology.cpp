#include "wog/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "wog/covers.hpp"
#include "wog/error.hpp"
#include "wog/polarization.hpp"

namespace wog {

Field Field::prime(std::uint32_t p) {
  if (p < 2) throw InputError("field modulus must be prime");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return prime(p);
  }
  throw InputError("unknown field '" + std::string(text) + "' (use q, f2, or f<p>)");
}

std::string Field::name() const { return kind == Kind::Rational ? "q" : "f" + std::to_string(modulus); }

int SimplicialComplex::dimension() const {
  int d = -1;
  for (auto f : facets) d = std::max(d, set_size(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](VertexSet f) { return set_size(f) == set_size(facets.front()); });
}

SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return set_order_less(b, a); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto s : sets)
    if (std::none_of(kept.begin(), kept.end(), [s](VertexSet k) { return (s & ~k) == 0; })) kept.push_back(s);
  std::sort(kept.begin(), kept.end(), set_order_less);
  return {std::move(vertices), std::move(kept)};
}

void OracleAudit::merge(const OracleAudit& o) {
  complexes += o.complexes;
  boundary_violations += o.boundary_violations;
  euler_violations += o.euler_violations;
  cm_impure += o.cm_impure;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Entry {
  std::uint32_t row;
  int sign;
};
using Column = std::vector<Entry>;  // sorted by row

/// Faces grouped by size; levels[s] holds the faces with s vertices.
struct FaceLevels {
  std::vector<std::vector<VertexSet>> levels;
  std::vector<std::unordered_map<VertexSet, std::uint32_t>> index;
};

FaceLevels enumerate_faces(const std::vector<VertexSet>& facets, std::size_t cap) {
  std::unordered_set<VertexSet> seen;
  for (auto f : facets) {
    VertexSet sub = f;
    while (true) {
      if (seen.insert(sub).second && seen.size() > cap) throw CapExceeded("faces", cap, seen.size());
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  FaceLevels fl;
  int top = 0;
  for (auto f : facets) top = std::max(top, set_size(f));
  fl.levels.resize(static_cast<std::size_t>(top) + 1);
  for (auto s : seen) fl.levels[static_cast<std::size_t>(set_size(s))].push_back(s);
  fl.index.resize(fl.levels.size());
  for (std::size_t k = 0; k < fl.levels.size(); ++k) {
    auto& lv = fl.levels[k];
    std::sort(lv.begin(), lv.end());
    fl.index[k].reserve(lv.size());
    for (std::uint32_t i = 0; i < lv.size(); ++i) fl.index[k].emplace(lv[i], i);
  }
  return fl;
}

/// Boundary columns of the faces with `size` vertices.
std::vector<Column> boundary(const FaceLevels& fl, std::size_t size) {
  std::vector<Column> cols;
  cols.reserve(fl.levels[size].size());
  for (auto face : fl.levels[size]) {
    Column col;
    int pos = 0;
    for (auto v : set_members(face)) {
      col.push_back({fl.index[size - 1].at(face & ~singleton(v)), pos % 2 == 0 ? 1 : -1});
      ++pos;
    }
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    cols.push_back(std::move(col));
  }
  return cols;
}

bool composite_vanishes(const std::vector<Column>& outer, const std::vector<Column>& inner) {
  std::unordered_map<std::uint32_t, long long> acc;
  for (const auto& col : outer) {
    acc.clear();
    for (const auto& e : col)
      for (const auto& f : inner[e.row]) acc[f.row] += static_cast<long long>(e.sign) * f.sign;
    for (const auto& [_, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

std::size_t rank_f2(const std::vector<Column>& cols, std::size_t rows) {
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(rows);
  std::size_t rank = 0;
  std::vector<std::uint64_t> bits(words);
  for (const auto& col : cols) {
    std::fill(bits.begin(), bits.end(), 0);
    for (const auto& e : col) bits[e.row / 64] ^= std::uint64_t{1} << (e.row % 64);
    while (true) {
      std::size_t w = words;
      while (w > 0 && bits[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t piv = (w - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(bits[w - 1])));
      if (pivots[piv].empty()) {
        pivots[piv] = bits;
        ++rank;
        break;
      }
      for (std::size_t i = 0; i < w; ++i) bits[i] ^= pivots[piv][i];
    }
  }
  return rank;
}

struct PrimeOps {
  using Value = std::uint64_t;
  std::uint64_t p;
  Value from_sign(int s) const { return s > 0 ? 1 : p - 1; }
  bool zero(const Value& v) const { return v == 0; }
  Value sub(const Value& a, const Value& b) const { return (a + p - b) % p; }
  Value mul(const Value& a, const Value& b) const { return a * b % p; }
  Value inv(Value a) const {
    Value r = 1;
    for (std::uint64_t e = p - 2; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  }
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
};

struct RationalOps {
  using Value = Rational;
  Value from_sign(int s) const { return Value(s); }
  bool zero(const Value& v) const { return v == 0; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
};

/// Column reduction with the largest row index as pivot.
template <typename Ops>
std::size_t rank_sparse(const std::vector<Column>& cols, std::size_t rows, const Ops& ops) {
  using V = typename Ops::Value;
  using SparseCol = std::vector<std::pair<std::uint32_t, V>>;
  std::vector<SparseCol> pivots(rows);
  std::size_t rank = 0;
  SparseCol cur, next;
  for (const auto& col : cols) {
    cur.clear();
    for (const auto& e : col) cur.emplace_back(e.row, ops.from_sign(e.sign));
    while (!cur.empty()) {
      const auto piv = cur.back().first;
      auto& other = pivots[piv];
      if (other.empty()) {
        other = cur;
        ++rank;
        break;
      }
      const V factor = ops.div(cur.back().second, other.back().second);
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < other.size()) {
        if (j == other.size() || (i < cur.size() && cur[i].first < other[j].first)) {
          next.push_back(cur[i++]);
        } else if (i == cur.size() || other[j].first < cur[i].first) {
          next.emplace_back(other[j].first, ops.sub(V(0), ops.mul(factor, other[j].second)));
          ++j;
        } else {
          V v = ops.sub(cur[i].second, ops.mul(factor, other[j].second));
          if (!ops.zero(v)) next.emplace_back(cur[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(cur, next);
    }
  }
  return rank;
}

std::size_t matrix_rank(const std::vector<Column>& cols, std::size_t rows, const Field& field) {
  if (cols.empty() || rows == 0) return 0;
  if (field.kind == Field::Kind::Rational) return rank_sparse(cols, rows, RationalOps{});
  if (field.modulus == 2) return rank_f2(cols, rows);
  return rank_sparse(cols, rows, PrimeOps{field.modulus});
}

HomologyProfile homology_of_facets(const std::vector<VertexSet>& facets, const OracleOptions& opt) {
  HomologyProfile prof;
  if (opt.audit) ++opt.audit->complexes;
  if (facets.empty()) return prof;
  const auto fl = enumerate_faces(facets, opt.face_cap);
  const std::size_t levels = fl.levels.size();
  // rank_of[s]: rank of the boundary map out of faces of size s.
  std::vector<std::size_t> rank_of(levels + 1, 0);
  std::vector<Column> prev;
  for (std::size_t s = 1; s < levels; ++s) {
    auto cols = boundary(fl, s);
    rank_of[s] = matrix_rank(cols, fl.levels[s - 1].size(), opt.field);
    if (opt.check_boundary && s >= 2 && !composite_vanishes(cols, prev)) prof.boundary_ok = false;
    prev = std::move(cols);
  }
  long long euler_faces = 0, euler_ranks = 0;
  for (std::size_t s = 0; s < levels; ++s) {
    const std::size_t h = fl.levels[s].size() - rank_of[s] - rank_of[s + 1];
    prof.face_counts.push_back(fl.levels[s].size());
    prof.ranks.push_back(h);
    const long long sign = s % 2 == 0 ? -1 : 1;  // size s is dimension s - 1
    euler_faces += sign * static_cast<long long>(fl.levels[s].size());
    euler_ranks += sign * static_cast<long long>(h);
  }
  prof.euler_ok = euler_faces == euler_ranks;
  if (opt.audit) {
    if (!prof.boundary_ok) ++opt.audit->boundary_violations;
    if (!prof.euler_ok) ++opt.audit->euler_violations;
  }
  return prof;
}

bool cm_facets(const std::vector<VertexSet>& facets, const OracleOptions& opt) {
  if (facets.empty()) return true;
  const int size = set_size(facets.front());
  for (auto f : facets)
    if (set_size(f) != size) return false;
  const auto fl = enumerate_faces(facets, opt.face_cap);
  std::vector<VertexSet> link;
  for (const auto& level : fl.levels) {
    for (auto face : level) {
      link.clear();
      VertexSet common = ~VertexSet{0};
      for (auto f : facets)
        if ((face & ~f) == 0) {
          link.push_back(f & ~face);
          common &= f & ~face;
        }
      if (link.size() == 1 || common != 0) continue;  // cones are acyclic
      const int link_dim = size - set_size(face) - 1;
      const auto prof = homology_of_facets(link, opt);
      for (int k = -1; k < link_dim; ++k)
        if (prof.ranks[static_cast<std::size_t>(k + 1)] != 0) return false;
    }
  }
  return true;
}

bool cm_checked(const std::vector<VertexSet>& facets, const OracleOptions& opt) {
  const bool cm = cm_facets(facets, opt);
  if (cm && opt.audit) {
    for (auto f : facets)
      if (set_size(f) != set_size(facets.front())) {
        ++opt.audit->cm_impure;
        break;
      }
  }
  return cm;
}

/// Faces with exactly `size` vertices lying in some facet with at least that many.
std::vector<VertexSet> faces_of_size(const std::vector<VertexSet>& facets, int size, std::size_t cap) {
  std::unordered_set<VertexSet> out;
  for (auto f : facets) {
    if (set_size(f) < size) continue;
    VertexSet sub = f;
    while (true) {
      if (set_size(sub) == size && out.insert(sub).second && out.size() > cap)
        throw CapExceeded("faces", cap, out.size());
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<VertexSet> v(out.begin(), out.end());
  std::sort(v.begin(), v.end());
  return v;
}

struct Polarized {
  SimplicialComplex complex;
  std::size_t extra = 0;  // polarized variables minus original variables
};

Polarized polarized_complex(const MonomialIdeal& ideal, std::size_t cover_cap) {
  const auto pol = polarize(ideal);
  Polarized out;
  out.complex = stanley_reisner(pol.ideal(), cover_cap);
  out.extra = pol.ideal().variables().size() - ideal.variables().size();
  return out;
}

}  // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& squarefree, std::size_t cover_cap) {
  const auto h = hypergraph_of(squarefree);
  const auto n = h.vertices.size();
  const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<VertexSet> facets;
  for (auto c : minimal_vertex_covers(h, cover_cap)) facets.push_back(all & ~c);
  return make_complex(std::move(h.vertices), std::move(facets));
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const OracleOptions& opt) {
  return homology_of_facets(c.facets, opt);
}

bool is_cm_complex(const SimplicialComplex& c, const OracleOptions& opt) { return cm_checked(c.facets, opt); }

bool is_cm_reisner(const MonomialIdeal& squarefree, const OracleOptions& opt) {
  return is_cm_complex(stanley_reisner(squarefree, opt.cover_cap), opt);
}

bool oracle_cm_monomial(const MonomialIdeal& ideal, const OracleOptions& opt) {
  return is_cm_complex(polarized_complex(ideal, opt.cover_cap).complex, opt);
}

std::size_t krull_dimension(const MonomialIdeal& ideal, std::size_t cover_cap) {
  const auto p = polarized_complex(ideal, cover_cap);
  return static_cast<std::size_t>(p.complex.dimension() + 1) - p.extra;
}

std::size_t depth_skeleton(const MonomialIdeal& ideal, const OracleOptions& opt) {
  const auto p = polarized_complex(ideal, opt.cover_cap);
  const auto& facets = p.complex.facets;
  if (facets.empty()) throw InputError("depth of the zero ring");
  int smallest = set_size(facets.front());
  for (auto f : facets) smallest = std::min(smallest, set_size(f));
  // The skeleton through dimension i is pure only when every facet reaches i.
  std::size_t depth_pol = 0;
  for (int size = smallest; size >= 1; --size) {
    const auto skeleton = size == smallest && p.complex.is_pure() ? facets : faces_of_size(facets, size, opt.face_cap);
    if (cm_checked(skeleton, opt)) {
      depth_pol = static_cast<std::size_t>(size);
      break;
    }
  }
  if (depth_pol < p.extra) throw Error("skeleton depth below the polarization shift");
  return depth_pol - p.extra;
}

bool is_sequentially_cm(const MonomialIdeal& ideal, const OracleOptions& opt) {
  const auto p = polarized_complex(ideal, opt.cover_cap);
  const auto& facets = p.complex.facets;
  const int top = p.complex.dimension() + 1;
  for (int size = 1; size <= top; ++size)
    if (!cm_checked(faces_of_size(facets, size, opt.face_cap), opt)) return false;
  return true;
}

}  // namespace wog
