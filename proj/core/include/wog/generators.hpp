#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

struct InstanceSpec {
  enum class Kind { Whiskered, Bipartite, Random };
  Kind kind = Kind::Whiskered;
  std::size_t base_max = 3;     // whiskered: base graphs on 1..base_max vertices
  std::size_t side_max = 3;     // bipartite: each side 1..side_max
  std::size_t side_min = 1;
  Weight weight_max = 2;
  /// Normalized streams weight only vertices that are neither sources nor
  /// sinks; raw streams weight every head and keep boundary weights.
  bool normalize = true;
  /// Drop instances isomorphic to an earlier one.
  bool dedupe = true;
  std::uint64_t seed = 0;       // random
  std::size_t count = 100;      // random
  std::size_t vertices_min = 2; // random
  std::size_t vertices_max = 8; // random
  double edge_probability = 0.5;
};

struct Instance {
  std::size_t id = 0;
  WeightedOrientedGraph graph;
};

/// Calls `sink` once per instance in a deterministic order; stops early
/// when it returns false.
void for_each_instance(const InstanceSpec& spec, const std::function<bool(const Instance&)>& sink);
std::vector<Instance> generate_instances(const InstanceSpec& spec);

/// Parses `whiskered`, `bipartite`, `random`.
InstanceSpec::Kind parse_instance_kind(const std::string& text);

}  // namespace wog
