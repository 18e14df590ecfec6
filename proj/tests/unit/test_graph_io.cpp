#include <doctest.h>

#include "helpers.hpp"
#include "wog/error.hpp"

using namespace wog;

TEST_SUITE("graph_io") {

TEST_CASE("files match the built-in fixtures") {
  CHECK(read_graph_file(test::data_path("d_path.graph")).graph == fixture_path());
  CHECK(read_graph_file(test::data_path("d_whiskered.graph")).graph == fixture_whiskered());
  CHECK(read_graph_file(test::data_path("d_bip.graph")).graph == fixture_bipartite());
}

TEST_CASE("render and parse round trip") {
  for (const auto& d : {fixture_path(), fixture_whiskered(), fixture_bipartite()})
    CHECK(parse_graph(render_graph(d)).graph == d);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto p = parse_graph("# header\n\nvertex a 1  # trailing\nvertex b 2\n   \nedge a b\n");
  CHECK(p.graph.vertex_count() == 2);
  CHECK(p.warnings.empty());
}

TEST_CASE("boundary weights normalize unless raw") {
  const std::string text = "vertex a 3\nvertex b 2\nedge a b\n";
  const auto normal = parse_graph(text);
  CHECK(normal.graph.weight(0) == 1);
  CHECK(normal.graph.weight(1) == 1);
  CHECK(normal.warnings.empty());
  const auto raw = parse_graph(text, true);
  CHECK(raw.graph.weight(0) == 3);
  CHECK(raw.graph.weight(1) == 2);
  REQUIRE(raw.warnings.size() == 2);
  CHECK(raw.warnings[0].find("source 'a'") != std::string::npos);
}

TEST_CASE("parse errors carry the line number") {
  auto message = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("vertex a 1\nvertex b\n").rfind("line 2:", 0) == 0);
  CHECK(message("vertex a x\n").find("not a natural number") != std::string::npos);
  CHECK(message("vertex a -1\n").find("not a natural number") != std::string::npos);
  CHECK(message("vertex a 0\n").find(">= 1") != std::string::npos);
  CHECK(message("vertex a 1\nnode b 1\n").rfind("line 2: unknown directive", 0) == 0);
  CHECK(message("vertex a 1\nedge a b\n").find("unknown vertex 'b'") != std::string::npos);
  CHECK(message("vertex a 1 2\n").rfind("line 1:", 0) == 0);
  CHECK(message("vertex a 99999999999999999999\n").find("not a natural number") != std::string::npos);
  CHECK(message("vertex x 1\nvertex x_2 1\n").find("collides") != std::string::npos);
  CHECK_THROWS_AS(read_graph_file(test::data_path("missing.graph")), InputError);
}

}  // TEST_SUITE
