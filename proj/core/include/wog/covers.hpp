#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wog/graph.hpp"
#include "wog/ideal.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

/// Simple hypergraph: no edge contains another.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<VertexSet> edges;
};

struct CoverCaps {
  std::size_t polarized_vertices = 24;  // minimal-cover enumeration
  std::size_t strong_vertices = 22;     // enumeration of all covers of G
};

/// One edge per generator support. Throws InputError on a non-squarefree
/// ideal.
Hypergraph hypergraph_of(const MonomialIdeal& ideal);
Hypergraph hypergraph_of(const UndirectedGraph& g);

/// All inclusion-minimal transversals, ordered by size then members.
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h, std::size_t cap = CoverCaps{}.polarized_vertices);

bool is_vertex_cover(const Hypergraph& h, VertexSet c);
bool is_minimal_vertex_cover(const Hypergraph& h, VertexSet c);

/// Generators are the products over the minimal vertex covers.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, std::size_t cap = CoverCaps{}.polarized_vertices);

/// A vertex cover of the underlying graph with its L1/L2/L3 split.
/// L1: vertices with an out-edge leaving the cover; L3: vertices whose
/// whole neighbourhood lies in the cover; L2: the rest.
struct CoverPartition {
  VertexSet cover = 0;
  VertexSet l1 = 0;
  VertexSet l2 = 0;
  VertexSet l3 = 0;
  bool minimal = false;
  bool strong = false;
  /// For each L3 vertex of a strong non-minimal cover, an edge (y, v) with
  /// y in L2 or L3 and weight(y) >= 2.
  std::vector<DirectedEdge> certificates;
  bool l1_l3_overlap = false;
};

CoverPartition partition_cover(const WeightedOrientedGraph& d, VertexSet cover);

/// Every strong vertex cover (minimal or not), ordered by size then members.
std::vector<CoverPartition> strong_vertex_covers(const WeightedOrientedGraph& d,
                                                 std::size_t cap = CoverCaps{}.strong_vertices);

enum class PrimeMethod { StrongCovers, Depolarization };

/// Associated primes as vertex sets (a vertex stands for its variable),
/// ordered by size then members; embedded primes are kept.
std::vector<VertexSet> associated_primes(const WeightedOrientedGraph& d, PrimeMethod method,
                                         const CoverCaps& caps = {});

enum class UnmixedMethod { StrongL3, Heights };

struct UnmixedReport {
  bool unmixed = true;
  /// StrongL3: a strong cover with nonempty L3 (fewest L3 vertices first).
  std::optional<CoverPartition> cover;
  /// StrongL3 with mixed underlying graph: two minimal covers of G of
  /// different sizes.
  std::optional<std::pair<VertexSet, VertexSet>> graph_covers;
  /// Heights: two associated primes of different heights.
  std::optional<std::pair<VertexSet, VertexSet>> primes;
};

UnmixedReport is_unmixed(const WeightedOrientedGraph& d, UnmixedMethod method, const CoverCaps& caps = {});

}  // namespace wog
