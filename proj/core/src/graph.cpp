#include "wog/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "wog/error.hpp"

namespace wog {

WeightedOrientedGraph::WeightedOrientedGraph(std::vector<VertexSpec> vertices,
                                             std::vector<DirectedEdge> edges) {
  names_.reserve(vertices.size());
  weights_.reserve(vertices.size());
  for (auto& v : vertices) {
    if (v.name.empty()) throw InputError("vertex name must not be empty");
    if (v.weight < 1) throw InputError("weight of vertex '" + v.name + "' must be >= 1");
    if (!index_.emplace(v.name, static_cast<VertexId>(names_.size())).second)
      throw InputError("duplicate vertex '" + v.name + "'");
    names_.push_back(std::move(v.name));
    weights_.push_back(v.weight);
  }
  const auto n = names_.size();
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw InputError("edge endpoint out of range");
    if (e.from == e.to) throw InputError("loop at vertex '" + names_[e.from] + "'");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (i > 0 && edges[i - 1] == e)
      throw InputError("duplicate edge " + names_[e.from] + " -> " + names_[e.to]);
    if (std::binary_search(edges.begin(), edges.end(), DirectedEdge{e.to, e.from}))
      throw InputError("anti-parallel edges between '" + names_[e.from] + "' and '" +
                       names_[e.to] + "'");
  }
  edges_ = std::move(edges);
  build();
}

WeightedOrientedGraph::WeightedOrientedGraph(
    std::vector<VertexSpec> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, VertexId, std::less<>> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    idx.emplace(vertices[i].name, static_cast<VertexId>(i));
  std::vector<DirectedEdge> ids;
  ids.reserve(edges.size());
  for (const auto& [from, to] : edges) {
    auto f = idx.find(from);
    auto t = idx.find(to);
    if (f == idx.end()) throw InputError("edge references unknown vertex '" + from + "'");
    if (t == idx.end()) throw InputError("edge references unknown vertex '" + to + "'");
    ids.push_back({f->second, t->second});
  }
  *this = WeightedOrientedGraph(std::move(vertices), std::move(ids));
}

void WeightedOrientedGraph::build() {
  out_.assign(names_.size(), {});
  in_.assign(names_.size(), {});
  for (const auto& e : edges_) {
    out_[e.from].push_back(e.to);
    in_[e.to].push_back(e.from);
  }
  for (auto& l : in_) std::sort(l.begin(), l.end());
  if (index_.empty()) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      index_.emplace(names_[i], static_cast<VertexId>(i));
  }
}

std::optional<VertexId> WeightedOrientedGraph::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId WeightedOrientedGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

bool WeightedOrientedGraph::has_edge(VertexId from, VertexId to) const {
  return std::binary_search(edges_.begin(), edges_.end(), DirectedEdge{from, to});
}

WeightedOrientedGraph WeightedOrientedGraph::with_weight(VertexId v, Weight w) const {
  if (v >= names_.size()) throw InputError("vertex id out of range");
  if (w < 1) throw InputError("weight must be >= 1");
  WeightedOrientedGraph copy = *this;
  copy.weights_[v] = w;
  return copy;
}

WeightedOrientedGraph WeightedOrientedGraph::with_weights(std::vector<Weight> weights) const {
  if (weights.size() != names_.size()) throw InputError("weight vector has wrong length");
  for (auto w : weights)
    if (w < 1) throw InputError("weight must be >= 1");
  WeightedOrientedGraph copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

std::vector<VertexSpec> WeightedOrientedGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back({names_[i], weights_[i]});
  return out;
}

UndirectedGraph::UndirectedGraph(std::vector<std::string> names, std::vector<UndirectedEdge> edges)
    : names_(std::move(names)) {
  for (auto& e : edges) {
    if (e.u == e.v) throw InputError("loop in undirected graph");
    if (e.u >= names_.size() || e.v >= names_.size()) throw InputError("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("duplicate undirected edge");
  edges_ = std::move(edges);
  adj_.assign(names_.size(), {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& l : adj_) std::sort(l.begin(), l.end());
}

bool UndirectedGraph::adjacent(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), UndirectedEdge{u, v});
}

UndirectedGraph underlying_graph(const WeightedOrientedGraph& d) {
  std::vector<UndirectedEdge> edges;
  edges.reserve(d.edges().size());
  for (const auto& e : d.edges()) edges.push_back({std::min(e.from, e.to), std::max(e.from, e.to)});
  return UndirectedGraph({d.names().begin(), d.names().end()}, std::move(edges));
}

Neighborhood neighborhoods(const WeightedOrientedGraph& d, VertexId v) {
  if (v >= d.vertex_count()) throw InputError("unknown vertex id " + std::to_string(v));
  Neighborhood n;
  n.out.assign(d.out_neighbors(v).begin(), d.out_neighbors(v).end());
  n.in.assign(d.in_neighbors(v).begin(), d.in_neighbors(v).end());
  return n;
}

Neighborhood neighborhoods(const WeightedOrientedGraph& d, std::string_view v) {
  return neighborhoods(d, d.id(v));
}

WeightedOrientedGraph normalize_boundary_weights(const WeightedOrientedGraph& d) {
  std::vector<Weight> w(d.weights().begin(), d.weights().end());
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.is_source(v) || d.is_sink(v)) w[v] = 1;
  return d.with_weights(std::move(w));
}

std::optional<LeafMatching> find_leaf_perfect_matching(const UndirectedGraph& g) {
  const auto n = g.vertex_count();
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> partner(n, kNone);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 1 || partner[v] != kNone) continue;
    VertexId u = g.neighbors(v)[0];
    if (partner[u] != kNone) return std::nullopt;
    VertexId x = u, y = v;
    if (g.degree(u) == 1 && u > v) std::swap(x, y);
    partner[x] = y;
    partner[y] = x;
    pairs.emplace_back(x, y);
  }
  if (std::find(partner.begin(), partner.end(), kNone) != partner.end()) return std::nullopt;
  std::sort(pairs.begin(), pairs.end());
  return LeafMatching{std::move(pairs)};
}

std::optional<Bipartition> find_bipartition(const UndirectedGraph& g) {
  const auto n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto u : g.neighbors(v)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          q.push(u);
        } else if (colour[u] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (VertexId v = 0; v < n; ++v) (colour[v] == 0 ? b.side_x : b.side_y).push_back(v);
  return b;
}

namespace {

// Orders the pairs of a perfect matching so that x_p ~ y_q forces p before q,
// smallest x first among ready pairs; nullopt on a cycle or on a failure of
// the transitivity condition.
std::optional<LeafMatching> order_matching(const UndirectedGraph& g,
                                           const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  const auto r = pairs.size();
  std::vector<std::vector<bool>> before(r, std::vector<bool>(r, false));
  std::vector<std::size_t> indegree(r, 0);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      if (p != q && g.adjacent(pairs[p].first, pairs[q].second)) {
        before[p][q] = true;
        ++indegree[q];
      }
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      if (before[p][q])
        for (std::size_t s = 0; s < r; ++s)
          if (s != p && before[q][s] && !before[p][s]) return std::nullopt;

  std::priority_queue<std::pair<VertexId, std::size_t>, std::vector<std::pair<VertexId, std::size_t>>,
                      std::greater<>>
      ready;
  for (std::size_t p = 0; p < r; ++p)
    if (indegree[p] == 0) ready.emplace(pairs[p].first, p);
  LeafMatching out;
  while (!ready.empty()) {
    auto [x, p] = ready.top();
    ready.pop();
    out.pairs.push_back(pairs[p]);
    for (std::size_t q = 0; q < r; ++q)
      if (before[p][q] && --indegree[q] == 0) ready.emplace(pairs[q].first, q);
  }
  if (out.pairs.size() != r) return std::nullopt;
  return out;
}

}  // namespace

std::vector<LeafMatching> all_cm_matching_orders(const UndirectedGraph& g, const Bipartition& sides,
                                                 std::size_t max_pairs) {
  std::vector<LeafMatching> result;
  if (sides.side_x.size() != sides.side_y.size()) return result;
  const auto r = sides.side_x.size();
  if (r > max_pairs) throw CapExceeded("matched pairs", max_pairs, r);

  std::vector<bool> used(g.vertex_count(), false);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == r) {
      if (auto ordered = order_matching(g, pairs)) result.push_back(std::move(*ordered));
      return;
    }
    const auto x = sides.side_x[i];
    for (auto y : g.neighbors(x)) {
      if (used[y]) continue;
      used[y] = true;
      pairs.emplace_back(x, y);
      extend(i + 1);
      pairs.pop_back();
      used[y] = false;
    }
  };
  extend(0);
  return result;
}

std::optional<LeafMatching> find_cm_matching_order(const UndirectedGraph& g) {
  auto sides = find_bipartition(g);
  if (!sides) throw InputError("graph is not bipartite");
  auto all = all_cm_matching_orders(g, *sides);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& d, std::span<const VertexId> keep) {
  std::vector<VertexId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> remap(d.vertex_count(), kNone);
  std::vector<VertexSpec> specs;
  for (auto v : ids) {
    if (v >= d.vertex_count()) throw InputError("vertex id out of range in induced subgraph");
    remap[v] = static_cast<VertexId>(specs.size());
    specs.push_back({d.name(v), d.weight(v)});
  }
  std::vector<DirectedEdge> edges;
  for (const auto& e : d.edges())
    if (remap[e.from] != kNone && remap[e.to] != kNone) edges.push_back({remap[e.from], remap[e.to]});
  return WeightedOrientedGraph(std::move(specs), std::move(edges));
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& d,
                                       const std::vector<std::string>& keep) {
  std::vector<VertexId> ids;
  ids.reserve(keep.size());
  for (const auto& name : keep) ids.push_back(d.id(name));
  return induced_subgraph(d, ids);
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> remap(g.vertex_count(), kNone);
  std::vector<std::string> names;
  for (auto v : ids) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range in induced subgraph");
    remap[v] = static_cast<VertexId>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<UndirectedEdge> edges;
  for (const auto& e : g.edges())
    if (remap[e.u] != kNone && remap[e.v] != kNone) edges.push_back({remap[e.u], remap[e.v]});
  return UndirectedGraph(std::move(names), std::move(edges));
}

}  // namespace wog
