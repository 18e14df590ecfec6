#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wog {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;

struct DirectedEdge {
  VertexId from;
  VertexId to;
  auto operator<=>(const DirectedEdge&) const = default;
};

struct UndirectedEdge {
  VertexId u;  // u < v
  VertexId v;
  auto operator<=>(const UndirectedEdge&) const = default;
};

struct VertexSpec {
  std::string name;
  Weight weight = 1;
};

/// A simple graph carrying one orientation per edge and a weight >= 1 per
/// vertex. Vertex ids are dense and follow declaration order; all
/// tie-breaking downstream uses that order. Values are immutable.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() = default;
  WeightedOrientedGraph(std::vector<VertexSpec> vertices, std::vector<DirectedEdge> edges);
  WeightedOrientedGraph(std::vector<VertexSpec> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::span<const Weight> weights() const noexcept { return weights_; }
  Weight weight(VertexId v) const { return weights_.at(v); }
  std::span<const DirectedEdge> edges() const noexcept { return edges_; }

  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;  // throws InputError

  bool has_edge(VertexId from, VertexId to) const;
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_.at(v); }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_.at(v); }
  std::size_t degree(VertexId v) const { return out_.at(v).size() + in_.at(v).size(); }

  bool is_source(VertexId v) const { return degree(v) > 0 && in_.at(v).empty(); }
  bool is_sink(VertexId v) const { return degree(v) > 0 && out_.at(v).empty(); }

  WeightedOrientedGraph with_weight(VertexId v, Weight w) const;
  WeightedOrientedGraph with_weights(std::vector<Weight> weights) const;

  std::vector<VertexSpec> vertex_specs() const;

  friend bool operator==(const WeightedOrientedGraph& a, const WeightedOrientedGraph& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  std::vector<std::string> names_;
  std::vector<Weight> weights_;
  std::vector<DirectedEdge> edges_;  // sorted
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::map<std::string, VertexId, std::less<>> index_;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::vector<std::string> names, std::vector<UndirectedEdge> edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::span<const UndirectedEdge> edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<UndirectedEdge> edges_;  // sorted, u < v
  std::vector<std::vector<VertexId>> adj_;
};

/// Pairs (x_i, y_i); in a leaf matching every y_i is a leaf.
struct LeafMatching {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  friend bool operator==(const LeafMatching&, const LeafMatching&) = default;
};

struct Bipartition {
  std::vector<VertexId> side_x;
  std::vector<VertexId> side_y;
};

struct Neighborhood {
  std::vector<VertexId> out;
  std::vector<VertexId> in;
};

UndirectedGraph underlying_graph(const WeightedOrientedGraph& d);

Neighborhood neighborhoods(const WeightedOrientedGraph& d, VertexId v);
Neighborhood neighborhoods(const WeightedOrientedGraph& d, std::string_view v);

/// Resets the weight of every source and every sink to 1.
WeightedOrientedGraph normalize_boundary_weights(const WeightedOrientedGraph& d);

/// Leaves are forced onto their unique neighbours; an isolated edge keeps
/// its earlier endpoint as x. Pairs are listed by increasing x.
std::optional<LeafMatching> find_leaf_perfect_matching(const UndirectedGraph& g);

/// Two-colouring by BFS; the first vertex of each component goes to side x.
std::optional<Bipartition> find_bipartition(const UndirectedGraph& g);

/// A perfect matching of a bipartite graph, ordered so that
/// (a) {x_i, y_i} are edges, (b) {x_i, y_j} an edge implies i <= j, and
/// (c) {x_i, y_j}, {x_j, y_k} edges with i < j < k imply {x_i, y_k} an edge.
/// Throws InputError for a non-bipartite graph.
std::optional<LeafMatching> find_cm_matching_order(const UndirectedGraph& g);

/// Every ordered perfect matching satisfying (a)-(c), one per matching.
/// Throws CapExceeded above `max_pairs` matched pairs.
std::vector<LeafMatching> all_cm_matching_orders(const UndirectedGraph& g, const Bipartition& sides,
                                                 std::size_t max_pairs = 12);

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& d, std::span<const VertexId> keep);
WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& d,
                                       const std::vector<std::string>& keep);
UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const VertexId> keep);

}  // namespace wog
