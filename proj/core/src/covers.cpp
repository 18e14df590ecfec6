#include "wog/covers.hpp"

#include <algorithm>
#include <set>

#include "wog/error.hpp"
#include "wog/polarization.hpp"

namespace wog {

std::string render_set(VertexSet s, std::span<const std::string> names) {
  std::string out = "{";
  bool first = true;
  for (auto v : set_members(s)) {
    if (!first) out += ", ";
    out += v < names.size() ? names[v] : std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace {

void check_cap(const char* name, std::size_t limit, std::size_t requested) {
  if (requested > limit) throw CapExceeded(name, limit, requested);
  if (requested > kMaxSetVertices) throw CapExceeded("bitmask-width", kMaxSetVertices, requested);
}

void sort_sets(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), set_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

struct CoverSearch {
  const std::vector<VertexSet>& edges;
  std::vector<VertexSet> found;

  // Every member of c still needs an edge it alone covers.
  bool members_have_private_edge(VertexSet c) const {
    VertexSet pending = c;
    for (auto e : edges) {
      const VertexSet hit = e & c;
      if (hit && (hit & (hit - 1)) == 0) pending &= ~hit;
      if (!pending) return true;
    }
    return pending == 0;
  }

  void run(VertexSet c, VertexSet forbidden) {
    if (!members_have_private_edge(c)) return;
    const VertexSet* open = nullptr;
    for (const auto& e : edges)
      if ((e & c) == 0) {
        open = &e;
        break;
      }
    if (!open) {
      found.push_back(c);
      return;
    }
    VertexSet cand = *open & ~forbidden;
    VertexSet tried = 0;
    while (cand) {
      const VertexSet bit = cand & (~cand + 1);
      run(c | bit, forbidden | tried);
      tried |= bit;
      cand &= cand - 1;
    }
  }
};

std::vector<VertexSet> minimal_covers_of_edges(const std::vector<VertexSet>& edges) {
  for (auto e : edges)
    if (e == 0) return {};  // an empty edge cannot be met
  CoverSearch search{edges, {}};
  search.run(0, 0);
  sort_sets(search.found);
  return search.found;
}

struct GraphMasks {
  std::vector<VertexSet> out, in, nbr;
  std::vector<VertexSet> edges;  // undirected, as two-element sets
};

GraphMasks graph_masks(const WeightedOrientedGraph& d) {
  const auto n = d.vertex_count();
  GraphMasks m{std::vector<VertexSet>(n, 0), std::vector<VertexSet>(n, 0), std::vector<VertexSet>(n, 0), {}};
  for (const auto& e : d.edges()) {
    m.out[e.from] |= singleton(e.to);
    m.in[e.to] |= singleton(e.from);
    m.edges.push_back(singleton(e.from) | singleton(e.to));
  }
  for (std::size_t v = 0; v < n; ++v) m.nbr[v] = m.out[v] | m.in[v];
  return m;
}

bool covers_edges(const std::vector<VertexSet>& edges, VertexSet c) {
  return std::all_of(edges.begin(), edges.end(), [c](VertexSet e) { return (e & c) != 0; });
}

bool minimal_over(const std::vector<VertexSet>& edges, VertexSet c) {
  if (!covers_edges(edges, c)) return false;
  for (auto v : set_members(c))
    if (covers_edges(edges, c & ~singleton(v))) return false;
  return true;
}

CoverPartition partition_with(const WeightedOrientedGraph& d, const GraphMasks& m, VertexSet c) {
  CoverPartition p;
  p.cover = c;
  for (auto v : set_members(c)) {
    if (m.out[v] & ~c) p.l1 |= singleton(v);
    if ((m.nbr[v] & ~c) == 0) p.l3 |= singleton(v);
  }
  p.l1_l3_overlap = (p.l1 & p.l3) != 0;
  p.l2 = c & ~(p.l1 | p.l3);
  p.minimal = minimal_over(m.edges, c);
  if (p.minimal) {
    p.strong = true;
    return p;
  }
  const VertexSet sources = p.l2 | p.l3;
  p.strong = true;
  for (auto v : set_members(p.l3)) {
    bool certified = false;
    for (auto y : set_members(m.in[v] & sources))
      if (d.weight(y) >= 2) {
        p.certificates.push_back({y, v});
        certified = true;
        break;
      }
    if (!certified) {
      p.strong = false;
      p.certificates.clear();
      break;
    }
  }
  return p;
}

}  // namespace

Hypergraph hypergraph_of(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InputError("hypergraph of a non-squarefree ideal");
  check_cap("bitmask-width", kMaxSetVertices, ideal.variables().size());
  Hypergraph h{{ideal.variables().begin(), ideal.variables().end()}, {}};
  for (const auto& g : ideal.generators()) {
    VertexSet e = 0;
    for (const auto& [v, _] : g.terms()) e |= singleton(v);
    h.edges.push_back(e);
  }
  return h;
}

Hypergraph hypergraph_of(const UndirectedGraph& g) {
  check_cap("bitmask-width", kMaxSetVertices, g.vertex_count());
  Hypergraph h{{g.names().begin(), g.names().end()}, {}};
  for (const auto& e : g.edges()) h.edges.push_back(singleton(e.u) | singleton(e.v));
  return h;
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h, std::size_t cap) {
  check_cap("cover-vertices", cap, h.vertices.size());
  return minimal_covers_of_edges(h.edges);
}

bool is_vertex_cover(const Hypergraph& h, VertexSet c) { return covers_edges(h.edges, c); }

bool is_minimal_vertex_cover(const Hypergraph& h, VertexSet c) { return minimal_over(h.edges, c); }

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, std::size_t cap) {
  const auto h = hypergraph_of(ideal);
  std::vector<Monomial> gens;
  for (auto c : minimal_vertex_covers(h, cap)) {
    const auto members = set_members<VarIndex>(c);
    gens.push_back(Monomial::squarefree(members));
  }
  return MonomialIdeal({ideal.variables().begin(), ideal.variables().end()}, std::move(gens));
}

CoverPartition partition_cover(const WeightedOrientedGraph& d, VertexSet cover) {
  check_cap("bitmask-width", kMaxSetVertices, d.vertex_count());
  const auto m = graph_masks(d);
  if (!covers_edges(m.edges, cover)) throw InputError("set is not a vertex cover of the underlying graph");
  return partition_with(d, m, cover);
}

std::vector<CoverPartition> strong_vertex_covers(const WeightedOrientedGraph& d, std::size_t cap) {
  const auto n = d.vertex_count();
  check_cap("strong-cover-vertices", cap, n);
  const auto m = graph_masks(d);
  std::vector<VertexSet> covers;
  if (n <= 18) {
    const VertexSet full = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    for (VertexSet c = 0;; ++c) {
      if (covers_edges(m.edges, c)) covers.push_back(c);
      if (c == full) break;
    }
  } else {
    const VertexSet full = (VertexSet{1} << n) - 1;
    std::set<VertexSet> seen;
    for (auto base : minimal_covers_of_edges(m.edges)) {
      // Walk every superset of base.
      const VertexSet rest = full & ~base;
      VertexSet sub = rest;
      while (true) {
        seen.insert(base | sub);
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    }
    covers.assign(seen.begin(), seen.end());
  }
  sort_sets(covers);
  std::vector<CoverPartition> out;
  for (auto c : covers) {
    auto p = partition_with(d, m, c);
    if (p.strong) out.push_back(std::move(p));
  }
  return out;
}

std::vector<VertexSet> associated_primes(const WeightedOrientedGraph& d, PrimeMethod method,
                                         const CoverCaps& caps) {
  std::vector<VertexSet> primes;
  if (method == PrimeMethod::StrongCovers) {
    for (const auto& p : strong_vertex_covers(d, caps.strong_vertices)) primes.push_back(p.cover);
  } else {
    const auto pol = polarize(edge_ideal(d));
    for (auto c : minimal_vertex_covers(hypergraph_of(pol.ideal()), caps.polarized_vertices)) {
      VertexSet base = 0;
      for (auto v : set_members(c)) base |= singleton(pol.variable(v).base);
      primes.push_back(base);
    }
  }
  sort_sets(primes);
  return primes;
}

UnmixedReport is_unmixed(const WeightedOrientedGraph& d, UnmixedMethod method, const CoverCaps& caps) {
  UnmixedReport report;
  if (method == UnmixedMethod::Heights) {
    const auto primes = associated_primes(d, PrimeMethod::Depolarization, caps);
    for (std::size_t i = 1; i < primes.size(); ++i)
      if (set_size(primes[i]) != set_size(primes[0])) {
        report.unmixed = false;
        report.primes = std::make_pair(primes[0], primes[i]);
        return report;
      }
    return report;
  }
  const auto g_covers = minimal_vertex_covers(hypergraph_of(underlying_graph(d)), caps.strong_vertices);
  for (std::size_t i = 1; i < g_covers.size(); ++i)
    if (set_size(g_covers[i]) != set_size(g_covers[0])) {
      report.unmixed = false;
      report.graph_covers = std::make_pair(g_covers[0], g_covers[i]);
      break;
    }
  const CoverPartition* best = nullptr;
  const auto strong = strong_vertex_covers(d, caps.strong_vertices);
  for (const auto& p : strong)
    if (p.l3 && (!best || set_size(p.l3) < set_size(best->l3))) best = &p;
  if (best) {
    report.unmixed = false;
    report.cover = *best;
  }
  return report;
}

}  // namespace wog
