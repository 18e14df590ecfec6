#include "wog/linear_quotients.hpp"

#include <algorithm>
#include <tuple>

#include "wog/covers.hpp"
#include "wog/error.hpp"
#include "wog/polarization.hpp"

namespace wog {

QuotientStep quotient_step(const std::vector<Monomial>& gens, std::size_t t) {
  QuotientStep step;
  step.position = t;
  std::vector<Monomial> quotients;
  quotients.reserve(t);
  for (std::size_t u = 0; u < t; ++u) quotients.push_back(gens[u].colon(gens[t]));
  std::vector<VarIndex> linear_vars;
  for (const auto& q : quotients)
    if (q.degree() == 1) linear_vars.push_back(q.terms().front().first);
  std::sort(linear_vars.begin(), linear_vars.end());
  linear_vars.erase(std::unique(linear_vars.begin(), linear_vars.end()), linear_vars.end());
  const Monomial* worst = nullptr;
  for (const auto& q : quotients) {
    const bool reduced = std::any_of(linear_vars.begin(), linear_vars.end(),
                                     [&](VarIndex v) { return q.contains(v); });
    // A failing quotient of least degree is a minimal generator.
    if (!reduced && (!worst || graded_lex_less(q, *worst))) worst = &q;
  }
  if (worst) {
    step.linear = false;
    step.obstruction = *worst;
  } else {
    step.variables = std::move(linear_vars);
  }
  return step;
}

LinearQuotientReport verify_linear_quotients(const DualOrdering& ord) {
  LinearQuotientReport report;
  const auto& gens = ord.generators;
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i].degree() != gens[0].degree()) report.pure = false;
  for (std::size_t t = 1; t < gens.size(); ++t) {
    auto step = quotient_step(gens, t);
    if (!step.linear && report.linear) {
      report.linear = false;
      report.first_failure = t;
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

std::vector<std::pair<VertexId, VertexId>> tail_weight_violations(const WeightedOrientedGraph& d,
                                                                  const LeafMatching& m) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [x, y] : m.pairs)
    if (d.has_edge(x, y) && d.weight(x) > 1) out.emplace_back(x, y);
  return out;
}

DualOrdering canonical_dual_ordering(const WeightedOrientedGraph& d, std::optional<LeafMatching> pairs,
                                     std::size_t cap) {
  LeafMatching m;
  if (pairs) {
    m = *pairs;
  } else {
    auto found = find_leaf_perfect_matching(underlying_graph(d));
    if (!found) throw InputError("graph has no leaf perfect matching");
    m = *found;
    const auto bad = tail_weight_violations(d, m);
    if (bad.size() == 1) {
      auto it = std::find(m.pairs.begin(), m.pairs.end(), bad.front());
      std::rotate(m.pairs.begin(), it, it + 1);
    }
  }
  const auto n = d.vertex_count();
  if (m.pairs.size() * 2 != n) throw InputError("pairing does not cover every vertex");
  // (pair, side) per vertex.
  std::vector<std::pair<std::size_t, int>> slot(n, {n, 0});
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    slot.at(m.pairs[i].first) = {i, 0};
    slot.at(m.pairs[i].second) = {i, 1};
  }
  for (const auto& s : slot)
    if (s.first == n) throw InputError("pairing does not cover every vertex");

  const auto pol = polarize(edge_ideal(d));
  const auto vars = pol.variables();
  std::vector<VarIndex> by_rank(vars.size());
  for (VarIndex v = 0; v < vars.size(); ++v) by_rank[v] = v;
  std::sort(by_rank.begin(), by_rank.end(), [&](VarIndex a, VarIndex b) {
    const auto& pa = vars[a];
    const auto& pb = vars[b];
    return std::tuple(slot[pa.base].first, slot[pa.base].second, pa.copy) <
           std::tuple(slot[pb.base].first, slot[pb.base].second, pb.copy);
  });
  std::vector<std::size_t> rank(vars.size());
  for (std::size_t r = 0; r < by_rank.size(); ++r) rank[by_rank[r]] = r;

  std::vector<std::vector<std::size_t>> keyed;
  for (auto c : minimal_vertex_covers(hypergraph_of(pol.ideal()), cap)) {
    std::vector<std::size_t> ranks;
    for (auto v : set_members(c)) ranks.push_back(rank[v]);
    std::sort(ranks.begin(), ranks.end());
    keyed.push_back(std::move(ranks));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  DualOrdering ord{{pol.ideal().variables().begin(), pol.ideal().variables().end()}, {}};
  for (const auto& ranks : keyed) {
    std::vector<VarIndex> members;
    for (auto r : ranks) members.push_back(by_rank[r]);
    std::sort(members.begin(), members.end());
    ord.generators.push_back(Monomial::squarefree(members));
  }
  return ord;
}

namespace {

struct Backtrack {
  const std::vector<Monomial>& pool;
  std::size_t node_cap;
  std::size_t nodes = 0;
  std::vector<Monomial> chosen;
  std::vector<bool> used;

  bool run() {
    if (chosen.size() == pool.size()) return true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      if (++nodes > node_cap) throw CapExceeded("quotient-search-nodes", node_cap, nodes);
      chosen.push_back(pool[i]);
      if (quotient_step(chosen, chosen.size() - 1).linear) {
        used[i] = true;
        if (run()) return true;
        used[i] = false;
      }
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<DualOrdering> search_linear_quotients(const MonomialIdeal& ideal, std::size_t node_cap) {
  DualOrdering first{{ideal.variables().begin(), ideal.variables().end()},
                     {ideal.generators().begin(), ideal.generators().end()}};
  if (verify_linear_quotients(first).linear) return first;
  Backtrack bt{first.generators, node_cap, 0, {}, std::vector<bool>(first.generators.size(), false)};
  if (!bt.run()) return std::nullopt;
  return DualOrdering{first.variables, std::move(bt.chosen)};
}

}  // namespace wog
