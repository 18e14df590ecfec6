#include "wog/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "wog/error.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

InstanceSpec::Kind parse_instance_kind(const std::string& text) {
  if (text == "whiskered") return InstanceSpec::Kind::Whiskered;
  if (text == "bipartite") return InstanceSpec::Kind::Bipartite;
  if (text == "random") return InstanceSpec::Kind::Random;
  throw InputError("unknown instance class '" + text + "' (use whiskered, bipartite, random)");
}

namespace {

using Perm = std::vector<VertexId>;
using EdgeList = std::vector<UndirectedEdge>;

UndirectedEdge mapped(const UndirectedEdge& e, const Perm& p) {
  auto a = p[e.u], b = p[e.v];
  return a < b ? UndirectedEdge{a, b} : UndirectedEdge{b, a};
}

EdgeList apply(const EdgeList& edges, const Perm& p) {
  EdgeList out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(mapped(e, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

EdgeList canonical_form(const EdgeList& edges, const std::vector<Perm>& perms) {
  EdgeList best = edges;
  for (const auto& p : perms) best = std::min(best, apply(edges, p));
  return best;
}

std::vector<Perm> automorphisms(const EdgeList& sorted_edges, const std::vector<Perm>& perms) {
  std::vector<Perm> out;
  for (const auto& p : perms)
    if (apply(sorted_edges, p) == sorted_edges) out.push_back(p);
  return out;
}

/// An orientation plus weights, encoded over a fixed undirected edge list.
struct Labeling {
  std::vector<bool> forward;  // edge u -> v when true (u < v)
  std::vector<Weight> weight;
  auto operator<=>(const Labeling&) const = default;
};

Labeling relabel(const EdgeList& edges, const Labeling& l, const Perm& p) {
  Labeling out{std::vector<bool>(edges.size()), std::vector<Weight>(l.weight.size())};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto from = l.forward[i] ? edges[i].u : edges[i].v;
    const auto to = l.forward[i] ? edges[i].v : edges[i].u;
    const UndirectedEdge img = mapped(edges[i], p);
    const auto pos = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), img) - edges.begin());
    out.forward[pos] = p[from] < p[to];
  }
  for (std::size_t v = 0; v < l.weight.size(); ++v) out.weight[p[v]] = l.weight[v];
  return out;
}

struct Emitter {
  const InstanceSpec& spec;
  const std::function<bool(const Instance&)>& sink;
  std::size_t next_id = 0;
  bool stopped = false;

  /// All orientations and weightings of one underlying graph, up to `autos`.
  void emit_graph(const std::vector<std::string>& names, const EdgeList& edges, const std::vector<Perm>& autos) {
    const auto n = names.size();
    const auto m = edges.size();
    std::set<Labeling> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m) && !stopped; ++mask) {
      Labeling l{std::vector<bool>(m), std::vector<Weight>(n, 1)};
      std::vector<bool> has_in(n, false), has_out(n, false);
      std::vector<DirectedEdge> directed;
      for (std::size_t i = 0; i < m; ++i) {
        l.forward[i] = (mask >> i) & 1U;
        const auto from = l.forward[i] ? edges[i].u : edges[i].v;
        const auto to = l.forward[i] ? edges[i].v : edges[i].u;
        has_out[from] = has_in[to] = true;
        directed.push_back({from, to});
      }
      std::vector<VertexId> free;
      for (VertexId v = 0; v < n; ++v) {
        const bool weighted = spec.normalize ? (has_in[v] && has_out[v]) : has_in[v];
        if (weighted) free.push_back(v);
      }
      std::vector<Weight> digits(free.size(), 1);
      while (!stopped) {
        for (std::size_t k = 0; k < free.size(); ++k) l.weight[free[k]] = digits[k];
        bool fresh = true;
        if (spec.dedupe) {
          Labeling best = l;
          for (const auto& p : autos) best = std::min(best, relabel(edges, l, p));
          fresh = seen.insert(best).second;
        }
        if (fresh) {
          std::vector<VertexSpec> specs;
          for (VertexId v = 0; v < n; ++v) specs.push_back({names[v], l.weight[v]});
          Instance inst{next_id++, WeightedOrientedGraph(std::move(specs), directed)};
          if (!sink(inst)) stopped = true;
        }
        std::size_t k = 0;
        while (k < digits.size() && digits[k] == spec.weight_max) digits[k++] = 1;
        if (k == digits.size()) break;
        ++digits[k];
      }
    }
  }
};

void whiskered(const InstanceSpec& spec, Emitter& out) {
  for (std::size_t k = 1; k <= spec.base_max && !out.stopped; ++k) {
    if (2 * k > kMaxSetVertices) throw CapExceeded("base vertices", kMaxSetVertices / 2, k);
    EdgeList all_pairs;
    for (VertexId a = 0; a < k; ++a)
      for (VertexId b = a + 1; b < k; ++b) all_pairs.push_back({a, b});
    const auto perms = all_perms(k);
    std::set<EdgeList> bases;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all_pairs.size()); ++mask) {
      EdgeList e;
      for (std::size_t i = 0; i < all_pairs.size(); ++i)
        if ((mask >> i) & 1U) e.push_back(all_pairs[i]);
      bases.insert(spec.dedupe ? canonical_form(e, perms) : e);
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
    for (const auto& base : bases) {
      if (out.stopped) break;
      EdgeList edges = base;
      for (VertexId i = 0; i < k; ++i) edges.push_back({i, static_cast<VertexId>(k + i)});
      std::sort(edges.begin(), edges.end());
      std::vector<Perm> autos;
      if (spec.dedupe)
        for (const auto& p : automorphisms(base, perms)) {
          Perm lifted(2 * k);
          for (VertexId i = 0; i < k; ++i) {
            lifted[i] = p[i];
            lifted[k + i] = static_cast<VertexId>(k + p[i]);
          }
          autos.push_back(std::move(lifted));
        }
      out.emit_graph(names, edges, autos);
    }
  }
}

void bipartite(const InstanceSpec& spec, Emitter& out) {
  std::set<EdgeList> done;
  for (std::size_t a = spec.side_min; a <= spec.side_max && !out.stopped; ++a)
    for (std::size_t b = spec.side_min; b <= spec.side_max && !out.stopped; ++b) {
      const auto n = a + b;
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= a; ++i) names.push_back("x" + std::to_string(i));
      for (std::size_t i = 1; i <= b; ++i) names.push_back("y" + std::to_string(i));
      EdgeList cross;
      for (VertexId i = 0; i < a; ++i)
        for (VertexId j = 0; j < b; ++j) cross.push_back({i, static_cast<VertexId>(a + j)});
      const auto perms = spec.dedupe ? all_perms(n) : std::vector<Perm>{};
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cross.size()) && !out.stopped; ++mask) {
        EdgeList e;
        std::vector<bool> touched(n, false);
        for (std::size_t i = 0; i < cross.size(); ++i)
          if ((mask >> i) & 1U) {
            e.push_back(cross[i]);
            touched[cross[i].u] = touched[cross[i].v] = true;
          }
        if (std::find(touched.begin(), touched.end(), false) != touched.end()) continue;
        std::vector<Perm> autos;
        if (spec.dedupe) {
          if (!done.insert(canonical_form(e, perms)).second) continue;
          autos = automorphisms(e, perms);
        }
        out.emit_graph(names, e, autos);
      }
    }
}

void random_stream(const InstanceSpec& spec, Emitter& out) {
  if (spec.vertices_min < 1 || spec.vertices_max < spec.vertices_min)
    throw InputError("random instances need 1 <= vertices_min <= vertices_max");
  if (spec.vertices_max > kMaxSetVertices) throw CapExceeded("random vertices", kMaxSetVertices, spec.vertices_max);
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> size(spec.vertices_min, spec.vertices_max);
  std::uniform_int_distribution<Weight> weight(1, spec.weight_max);
  std::bernoulli_distribution edge(spec.edge_probability), coin(0.5);
  for (std::size_t i = 0; i < spec.count && !out.stopped; ++i) {
    const auto n = size(rng);
    std::vector<VertexSpec> specs;
    for (std::size_t v = 1; v <= n; ++v) specs.push_back({"v" + std::to_string(v), weight(rng)});
    std::vector<DirectedEdge> edges;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (edge(rng)) edges.push_back(coin(rng) ? DirectedEdge{a, b} : DirectedEdge{b, a});
    WeightedOrientedGraph g(std::move(specs), std::move(edges));
    if (spec.normalize) g = normalize_boundary_weights(g);
    if (!out.sink(Instance{out.next_id++, std::move(g)})) out.stopped = true;
  }
}

}  // namespace

void for_each_instance(const InstanceSpec& spec, const std::function<bool(const Instance&)>& sink) {
  if (spec.weight_max < 1) throw InputError("weight cap must be at least 1");
  Emitter out{spec, sink};
  switch (spec.kind) {
    case InstanceSpec::Kind::Whiskered: whiskered(spec, out); break;
    case InstanceSpec::Kind::Bipartite: bipartite(spec, out); break;
    case InstanceSpec::Kind::Random: random_stream(spec, out); break;
  }
}

std::vector<Instance> generate_instances(const InstanceSpec& spec) {
  std::vector<Instance> out;
  for_each_instance(spec, [&](const Instance& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

}  // namespace wog
