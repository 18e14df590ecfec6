#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "wog/error.hpp"
#include "wog/generators.hpp"

using namespace wog;

namespace {

std::size_t count(const InstanceSpec& s) { return generate_instances(s).size(); }

/// Edge-ideal generators under a vertex renaming, as sorted strings.
std::vector<std::string> relabeled_ideal(const WeightedOrientedGraph& d, const std::map<std::string, std::string>& to) {
  std::vector<VertexSpec> specs;
  for (const auto& v : d.vertex_specs()) specs.push_back({to.count(v.name) ? to.at(v.name) : v.name, v.weight});
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : d.edges()) edges.emplace_back(specs[e.from].name, specs[e.to].name);
  std::sort(specs.begin(), specs.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return test::sorted(test::generator_strings(edge_ideal(WeightedOrientedGraph(specs, edges))));
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("single whiskered vertex") {
  InstanceSpec s;
  s.base_max = 1;
  CHECK(count(s) == 2);  // x1 -> y1 and y1 -> x1 differ once x1 is the base vertex
  s.weight_max = 3;
  CHECK(count(s) == 2);
}

TEST_CASE("single-edge bipartite stream") {
  InstanceSpec s;
  s.kind = InstanceSpec::Kind::Bipartite;
  s.side_max = 1;
  s.weight_max = 2;
  s.normalize = false;
  s.dedupe = false;
  const auto all = generate_instances(s);
  REQUIRE(all.size() == 4);  // two orientations, head weight 1 or 2
  std::set<std::string> seen;
  for (const auto& i : all) seen.insert(render_graph(i.graph));
  CHECK(seen.size() == 4);
  s.normalize = true;
  CHECK(count(s) == 2);
  s.dedupe = true;
  CHECK(count(s) == 1);
}

TEST_CASE("exhaustive whiskered counts are stable") {
  InstanceSpec s;
  s.base_max = 3;
  s.weight_max = 2;
  CHECK(count(s) == 168);
  s.base_max = 2;
  CHECK(count(s) == 14);
}

TEST_CASE("whiskered stream contains the weight-2 variant of the path fixture") {
  InstanceSpec s;
  s.base_max = 2;
  s.weight_max = 2;
  const auto target = test::sorted(test::generator_strings(edge_ideal(fixture_path().with_weight(1, 2))));
  bool found = false;
  for (const auto& i : generate_instances(s)) {
    const auto& g = i.graph;
    found = found || relabeled_ideal(g, {}) == target ||
            relabeled_ideal(g, {{"x1", "x2"}, {"x2", "x1"}, {"y1", "y2"}, {"y2", "y1"}}) == target;
  }
  CHECK(found);
}

TEST_CASE("every whiskered instance has a leaf matching and normalized boundary") {
  InstanceSpec s;
  s.base_max = 3;
  for (const auto& i : generate_instances(s)) {
    CHECK(find_leaf_perfect_matching(underlying_graph(i.graph)));
    CHECK(normalize_boundary_weights(i.graph) == i.graph);
  }
}

TEST_CASE("bipartite instances have no isolated vertices") {
  InstanceSpec s;
  s.kind = InstanceSpec::Kind::Bipartite;
  s.side_max = 2;
  std::size_t n = 0;
  for (const auto& i : generate_instances(s)) {
    ++n;
    const auto g = underlying_graph(i.graph);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) > 0);
    CHECK(find_bipartition(g));
  }
  CHECK(n == 29);
}

TEST_CASE("random streams are reproducible") {
  InstanceSpec s;
  s.kind = InstanceSpec::Kind::Random;
  s.seed = 7;
  s.count = 10;
  s.vertices_min = 6;
  s.vertices_max = 6;
  const auto a = generate_instances(s);
  const auto b = generate_instances(s);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph == b[i].graph);
    CHECK(a[i].graph.vertex_count() == 6);
  }
  s.seed = 8;
  CHECK_FALSE(generate_instances(s).front().graph == a.front().graph);
}

TEST_CASE("early stop and errors") {
  InstanceSpec s;
  s.base_max = 3;
  std::size_t seen = 0;
  for_each_instance(s, [&](const Instance&) { return ++seen < 5; });
  CHECK(seen == 5);
  s.weight_max = 0;
  CHECK_THROWS_AS(count(s), InputError);
  InstanceSpec r;
  r.kind = InstanceSpec::Kind::Random;
  r.vertices_min = 5;
  r.vertices_max = 3;
  CHECK_THROWS_AS(count(r), InputError);
  r.vertices_min = 2;
  r.vertices_max = 70;
  CHECK_THROWS_AS(count(r), CapExceeded);
  CHECK(parse_instance_kind("bipartite") == InstanceSpec::Kind::Bipartite);
  CHECK_THROWS_AS(parse_instance_kind("tree"), InputError);
}

}  // TEST_SUITE
