#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "wog/classify.hpp"
#include "wog/colon_displays.hpp"
#include "wog/cover_structure.hpp"
#include "wog/error.hpp"
#include "wog/polarization.hpp"

using namespace wog;

namespace {

ClassifyOptions with_oracle(Field f = Field::prime(2)) {
  ClassifyOptions o;
  o.oracle = true;
  o.oracle_options.field = f;
  return o;
}

bool all_pass(const ClassificationReport& r) {
  return std::all_of(r.conditions.begin(), r.conditions.end(), [](const auto& c) { return c.pass; });
}

WeightedOrientedGraph reversed_y4_edge() {
  return test::graph(
      "vertex x1 2\nvertex x2 2\nvertex x3 1\nvertex x4 1\nvertex y1 1\nvertex y2 1\nvertex y3 1\nvertex y4 2\n"
      "edge y1 x1\nedge x1 y2\nedge x1 y3\nedge x1 y4\nedge y2 x2\nedge x2 y3\nedge y3 x3\nedge x4 y4\n");
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("bipartite fixture is CM under every condition") {
  for (const auto& f : {Field::prime(2), Field::rationals()}) {
    const auto r = classify(fixture_bipartite(), with_oracle(f));
    CHECK(r.graph_class == GraphClass::Bipartite);
    CHECK(r.cm == Verdict::Yes);
    CHECK(r.unmixed == Verdict::Yes);
    CHECK(r.scm == Verdict::Yes);
    REQUIRE(r.conditions.size() == 4);
    CHECK(all_pass(r));
    CHECK(r.oracle_cm == true);
    CHECK(r.disagreements.empty());
    CHECK(r.property_violations.empty());
    REQUIRE(r.matching);
    const auto d = fixture_bipartite();
    for (std::size_t i = 0; i < 4; ++i) CHECK(d.name(r.matching->pairs[i].first) == "x" + std::to_string(i + 1));
  }
  const auto st = bipartite_weight_conditions(fixture_bipartite(), *classify(fixture_bipartite()).matching);
  REQUIRE(st.size() == 2);
  CHECK(st[0].pass);
  CHECK(st[1].pass);
}

TEST_CASE("path fixture is mixed and not CM") {
  const auto r = classify(fixture_path(), with_oracle(Field::rationals()));
  CHECK(r.graph_class == GraphClass::SingleViolation);
  CHECK(r.unmixed == Verdict::No);
  CHECK(r.cm == Verdict::No);
  CHECK(r.oracle_cm == false);
  CHECK(r.disagreements.empty());
  const auto* b = r.condition("(b) unmixed");
  REQUIRE(b);
  CHECK(b->witness.find("{x2, y1, y2}") != std::string::npos);
}

TEST_CASE("whiskered fixture is sequentially CM with dual linear quotients") {
  const auto r = classify(fixture_whiskered(), with_oracle(Field::rationals()));
  CHECK(r.graph_class == GraphClass::SingleViolation);
  CHECK(r.cm == Verdict::No);
  CHECK(r.scm == Verdict::Yes);
  REQUIRE(r.quotients);
  CHECK(r.quotients->linear);
  CHECK(r.oracle_cm == false);
  CHECK(r.oracle_scm == true);
  CHECK(r.disagreements.empty());
  const auto* c = r.condition("(c) tail weights");
  REQUIRE(c);
  CHECK_FALSE(c->pass);
  CHECK(c->witness.find("x1 -> y1") != std::string::npos);
  CHECK(r.condition("(d) dual linear quotients")->pass);
}

TEST_CASE("whiskered fixture with weight(x1) = 1 is CM") {
  const auto d = fixture_whiskered().with_weight(0, 1);
  const auto r = classify(d, with_oracle());
  CHECK(r.graph_class == GraphClass::Whiskered);
  CHECK(r.cm == Verdict::Yes);
  CHECK(r.unmixed == Verdict::Yes);
  CHECK(r.oracle_cm == true);
  CHECK(r.disagreements.empty());
}

TEST_CASE("matched edges all pointing into the base give a CM verdict") {
  const auto d = test::graph("vertex x1 2\nvertex x2 3\nvertex y1 1\nvertex y2 1\nedge y1 x1\nedge y2 x2\nedge x1 x2\n");
  const auto r = classify_whiskered(d, with_oracle());
  CHECK(r.condition("(c) tail weights")->pass);
  CHECK(r.cm == Verdict::Yes);
  CHECK(r.disagreements.empty());
}

TEST_CASE("two tail violations fall outside the single-violation route") {
  const auto two = test::graph(
      "vertex x1 2\nvertex x2 1\nvertex x3 2\nvertex y1 1\nvertex y2 1\nvertex y3 1\n"
      "edge x1 y1\nedge x3 y3\nedge y2 x2\nedge x2 x1\nedge x2 x3\n");
  CHECK(classify_single_violation(two).graph_class == GraphClass::Uncovered);
  const auto r = classify(two, with_oracle());
  CHECK(r.graph_class == GraphClass::Whiskered);
  CHECK(r.scm == Verdict::Unknown);
  CHECK_FALSE(r.quotients);
  CHECK(classify_single_violation(fixture_whiskered().with_weight(0, 1)).graph_class == GraphClass::Uncovered);
}

TEST_CASE("bipartite weight changes") {
  SUBCASE("raising weight(y4) to 3 keeps the verdict") {
    const auto r = classify(fixture_bipartite().with_weight(7, 3), with_oracle());
    CHECK(r.cm == Verdict::Yes);
    CHECK(r.oracle_cm == true);
  }
  SUBCASE("reversing y4 -> x1 re-evaluates (d) and (e) and agrees with the oracle") {
    const auto r = classify(reversed_y4_edge(), with_oracle());
    CHECK(r.graph_class == GraphClass::Bipartite);
    CHECK(r.oracle_cm == true);
    CHECK(r.cm == Verdict::Yes);
    CHECK(r.disagreements.empty());
  }
  SUBCASE("matched edges of the CM fixture have light tails") {
    const auto d = fixture_bipartite();
    const auto r = classify(d);
    REQUIRE(r.matching);
    for (const auto& [x, y] : r.matching->pairs) CHECK(d.weight(d.has_edge(x, y) ? x : y) == 1);
  }
}

TEST_CASE("bipartite errors and unmatched graphs") {
  CHECK_THROWS_AS(classify_bipartite(test::graph("vertex a 1\nvertex b 1\nvertex c 1\nedge a b\nedge b c\nedge c a\n")),
                  InputError);
  CHECK_THROWS_AS(classify_bipartite(test::graph("vertex a 1\nvertex b 1\nvertex c 1\nedge a b\n")), InputError);
  const auto k22 = test::graph("vertex x1 1\nvertex x2 1\nvertex y1 1\nvertex y2 1\n"
                               "edge x1 y1\nedge x1 y2\nedge x2 y1\nedge x2 y2\n");
  const auto r = classify(k22, with_oracle());
  CHECK(r.graph_class == GraphClass::Bipartite);
  CHECK(r.cm == Verdict::No);
  CHECK_FALSE(r.condition("(b)-(c) matching order")->pass);
  CHECK(r.oracle_cm == false);
  const auto star = test::graph("vertex c 1\nvertex a 1\nvertex b 1\nedge c a\nedge c b\n");
  CHECK_FALSE(classify(star).condition("(a) perfect matching")->pass);
}

TEST_CASE("graphs outside both classes get oracle verdicts only") {
  const auto tri = test::graph("vertex a 1\nvertex b 2\nvertex c 1\nedge a b\nedge b c\nedge c a\n");
  const auto r = classify(tri, with_oracle());
  CHECK(r.graph_class == GraphClass::Uncovered);
  CHECK(r.cm == Verdict::Unknown);
  CHECK(r.oracle_cm.has_value());
  CHECK(r.oracle_scm.has_value());
  CHECK(classify(tri).oracle_checked == false);
}

TEST_CASE("conjecture outcomes") {
  CHECK(check_conjecture(fixture_bipartite()).outcome == ConjectureOutcome::Pass);
  const auto p = check_conjecture(fixture_path());
  CHECK(p.outcome == ConjectureOutcome::Vacuous);
  CHECK_FALSE(p.unmixed);
  CHECK(to_string(ConjectureOutcome::Counterexample) == "counterexample");
}

TEST_CASE("Artinian witness") {
  const auto ok = artinian_witness(fixture_whiskered().with_weight(0, 1));
  CHECK(ok.matches);
  CHECK(ok.renamed_polarization == ok.target);
  const auto bad = artinian_witness(fixture_path());
  CHECK_FALSE(bad.matches);
  CHECK_THROWS_AS(artinian_witness(fixture_bipartite()), InputError);
}

TEST_CASE("cover structure on the whiskered fixtures") {
  for (const auto& d : {fixture_whiskered(), fixture_whiskered().with_weight(0, 1), fixture_path()}) {
    const auto rep = check_cover_structure(d);
    CHECK(rep.covers > 0);
    CHECK(rep.checks > 0);
    CHECK(rep.violations.empty());
  }
  CHECK(check_cover_structure(fixture_whiskered()).covers == 9);
  CHECK_THROWS_AS(check_cover_structure(fixture_bipartite()), InputError);
}

TEST_CASE("colon displays at y4 of the bipartite fixture") {
  const auto d = fixture_bipartite();
  const auto r = classify(d);
  REQUIRE(r.matching);
  const auto rep = check_colon_displays(d, *r.matching);
  CHECK(rep.applicable);
  CHECK(rep.violations.empty());
  CHECK(rep.l1_renamed == rep.f_ideal);
  CHECK_FALSE(rep.f_ideal.is_zero());
  CHECK_THROWS_AS(check_colon_displays(d, LeafMatching{}), InputError);

  const auto light = d.with_weight(7, 1);
  CHECK_FALSE(check_colon_displays(light, *classify(light).matching).applicable);
}

TEST_CASE("labels") {
  CHECK(to_string(GraphClass::SingleViolation) == "single-violation");
  CHECK(to_string(Verdict::Unknown) == "unknown");
  CHECK(classify(fixture_bipartite()).condition("nope") == nullptr);
}

}  // TEST_SUITE
