#include "wog/colon_displays.hpp"

#include <algorithm>
#include <set>

#include "wog/error.hpp"
#include "wog/polarization.hpp"

namespace wog {

namespace {

using Names = std::vector<std::string>;

MonomialIdeal ideal_of(const Names& registry, const std::vector<Monomial>& gens) { return MonomialIdeal(registry, gens); }

/// Edge ideal of the induced graph without `drop`, over the full registry.
std::vector<Monomial> edge_gens_without(const WeightedOrientedGraph& d, const std::set<VertexId>& drop) {
  std::vector<Monomial> gens;
  for (const auto& e : d.edges())
    if (!drop.count(e.from) && !drop.count(e.to)) gens.push_back(Monomial({{e.from, 1}, {e.to, d.weight(e.to)}}));
  return gens;
}

void append(std::vector<Monomial>& to, const std::vector<Monomial>& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace

ColonDisplayReport check_colon_displays(const WeightedOrientedGraph& input, const LeafMatching& ordered) {
  if (ordered.pairs.empty()) throw InputError("empty matching");
  std::vector<Weight> w(input.weights().begin(), input.weights().end());
  for (auto& x : w) x = std::min<Weight>(x, 2);
  const auto d = input.with_weights(w);
  const auto [xr, yr] = ordered.pairs.back();
  ColonDisplayReport rep;
  if (d.weight(yr) < 2) return rep;
  rep.applicable = true;

  const Names reg(d.names().begin(), d.names().end());
  const auto ideal = edge_ideal(d);
  const auto y = Monomial::variable(yr);

  std::set<VertexId> v1, v2, in;
  for (auto v : d.out_neighbors(yr)) (d.weight(v) == 1 ? v1 : v2).insert(v);
  for (auto v : d.in_neighbors(yr)) in.insert(v);
  auto squares = [&] {
    std::vector<Monomial> g;
    for (auto v : v2) g.push_back(Monomial::variable(v, 2));
    return g;
  };
  auto vars = [&](const std::set<VertexId>& s) {
    std::vector<Monomial> g;
    for (auto v : s) g.push_back(Monomial::variable(v));
    return g;
  };
  auto expect = [&](const MonomialIdeal& got, const MonomialIdeal& want, const std::string& what) {
    if (!(got == want)) rep.violations.push_back(what + ": got\n" + render_ideal(got) + "expected\n" + render_ideal(want));
  };

  const auto colon1 = colon(ideal, y);
  {
    std::vector<Monomial> g{Monomial({{xr, 1}, {yr, 1}})};
    for (auto v : in) g.push_back(Monomial({{v, 1}, {yr, 1}}));
    append(g, vars(v1));
    append(g, squares());
    append(g, edge_gens_without(d, v1));
    expect(colon1, ideal_of(reg, g), "colon by y_r");
  }
  const auto sum = add_variables(colon1, std::vector<VarIndex>{yr});
  {
    auto a = v1;
    a.insert(yr);
    auto g = vars(a);
    append(g, squares());
    append(g, edge_gens_without(d, a));
    expect(sum, ideal_of(reg, g), "colon by y_r plus y_r");
    expect(sum, colon(ideal, Monomial({{xr, 1}, {yr, 1}})), "colon by x_r y_r");
  }
  {
    auto b = in;
    b.insert(v1.begin(), v1.end());
    auto g = vars(b);
    append(g, squares());
    append(g, edge_gens_without(d, b));
    expect(colon(colon1, y), ideal_of(reg, g), "double colon by y_r");
  }

  // Partial polarization of L1 against the edge ideal of F.
  std::vector<VertexId> partner(d.vertex_count(), 0);
  for (const auto& [x, yy] : ordered.pairs) {
    partner[x] = yy;
    partner[yy] = x;
  }
  std::set<VertexId> a = v1;
  a.insert(yr);
  std::vector<Monomial> h;
  for (const auto& e : d.edges()) {
    if (a.count(e.from) || a.count(e.to)) continue;
    if (v2.count(e.to)) continue;  // edges into V'' are dropped
    h.push_back(Monomial({{e.from, 1}, {e.to, d.weight(e.to)}}));
  }
  auto l1_gens = h;
  append(l1_gens, squares());
  rep.l1 = ideal_of(reg, l1_gens);
  std::vector<VarIndex> split(v2.begin(), v2.end());
  const auto pol = partial_polarize(rep.l1, split);
  Names renamed;
  for (const auto& pv : pol.variables()) {
    if (!v2.count(pv.base)) renamed.push_back(reg[pv.base]);
    else renamed.push_back(pv.copy == 1 ? reg[pv.base] : reg[partner[pv.base]]);
  }
  // The second copy takes the name of y_i, which L1 never uses.
  auto l1r = rename_variables(pol.ideal(), [&] {
    Names unique = renamed;
    for (std::size_t i = 0; i < unique.size(); ++i)
      if (std::count(renamed.begin(), renamed.end(), unique[i]) > 1 && !v2.count(pol.variable(static_cast<VarIndex>(i)).base))
        unique[i] += "#unused";
    return unique;
  }());
  rep.l1_renamed = over_registry(l1r, reg);

  std::vector<Monomial> f = h;
  for (auto v : v2) f.push_back(Monomial({{v, 1}, {partner[v], 1}}));
  rep.f_ideal = ideal_of(reg, f);
  expect(rep.l1_renamed, rep.f_ideal, "partial polarization of L1");
  return rep;
}

}  // namespace wog
