#include <doctest.h>

#include "helpers.hpp"
#include "wog/error.hpp"
#include "wog/homology.hpp"
#include "wog/polarization.hpp"

using namespace wog;

namespace {

SimplicialComplex complex_of(std::vector<std::string> vertices, std::vector<std::vector<std::uint32_t>> facets) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) sets.push_back(set_of<std::uint32_t>(f));
  return make_complex(std::move(vertices), std::move(sets));
}

using Ranks = std::vector<std::size_t>;

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("fields") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("f2") == Field::prime(2));
  CHECK(Field::parse("f7").modulus == 7);
  CHECK(Field::prime(3).name() == "f3");
  CHECK(Field::rationals().name() == "q");
  CHECK_THROWS_AS(Field::parse("f4"), InputError);
  CHECK_THROWS_AS(Field::parse("f1"), InputError);
  CHECK_THROWS_AS(Field::parse("r"), InputError);
}

TEST_CASE("make_complex keeps maximal faces") {
  const auto c = complex_of({"a", "b", "c"}, {{0, 1}, {0}, {1, 2}, {0, 1}});
  CHECK(c.facets.size() == 2);
  CHECK(c.dimension() == 1);
  CHECK(c.is_pure());
  CHECK_FALSE(complex_of({"a", "b", "c"}, {{0, 1}, {2}}).is_pure());
}

TEST_CASE("reduced homology of small complexes over every field") {
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    OracleOptions opt;
    opt.field = f;
    CHECK(reduced_homology(complex_of({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), opt).ranks == Ranks{0, 0, 1});
    CHECK(reduced_homology(complex_of({"a", "b"}, {{0}, {1}}), opt).ranks == Ranks{0, 1});
    CHECK(reduced_homology(complex_of({"x1", "x2", "y1", "y2"}, {{0, 1}, {2, 3}}), opt).ranks == Ranks{0, 1, 0});
    CHECK(reduced_homology(complex_of({"a", "b", "c"}, {{0, 1, 2}}), opt).ranks == Ranks{0, 0, 0, 0});
    CHECK(reduced_homology(complex_of({}, {{}}), opt).ranks == Ranks{1});
  }
}

TEST_CASE("torsion separates the fields on the projective plane") {
  // Six-vertex triangulation of the real projective plane.
  const auto rp2 = complex_of({"1", "2", "3", "4", "5", "6"},
                              {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                               {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
  OracleOptions f2;
  OracleOptions q;
  q.field = Field::rationals();
  CHECK(reduced_homology(rp2, f2).ranks == Ranks{0, 0, 1, 1});
  CHECK(reduced_homology(rp2, q).ranks == Ranks{0, 0, 0, 0});
  CHECK_FALSE(is_cm_complex(rp2, f2));
  CHECK(is_cm_complex(rp2, q));
}

TEST_CASE("face counts, boundary and Euler audits") {
  OracleAudit audit;
  OracleOptions opt;
  opt.audit = &audit;
  const auto p = reduced_homology(complex_of({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), opt);
  CHECK(p.face_counts == Ranks{1, 3, 3});
  CHECK(p.boundary_ok);
  CHECK(p.euler_ok);
  CHECK(audit.complexes == 1);
  CHECK(audit.clean());
}

TEST_CASE("Stanley-Reisner complex of the polarized path ideal") {
  const auto pol = polarize(edge_ideal(fixture_path())).ideal();
  const auto c = stanley_reisner(pol);
  std::vector<int> sizes;
  for (auto f : c.facets) sizes.push_back(set_size(f));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{4, 4, 4, 4, 5, 5, 5, 5});
}

TEST_CASE("Cohen-Macaulay verdicts") {
  CHECK(is_cm_reisner(polarize(edge_ideal(fixture_bipartite())).ideal()));
  CHECK_FALSE(is_cm_reisner(polarize(edge_ideal(fixture_path())).ideal()));
  CHECK(is_cm_reisner(parse_ideal("x*y\n")));
  CHECK(oracle_cm_monomial(edge_ideal(fixture_bipartite())));
  CHECK_FALSE(oracle_cm_monomial(edge_ideal(fixture_whiskered())));
  CHECK(oracle_cm_monomial(edge_ideal(fixture_whiskered().with_weight(0, 1))));
  const auto sq = radical(edge_ideal(fixture_bipartite()));
  CHECK(oracle_cm_monomial(sq) == is_cm_reisner(sq));
}

TEST_CASE("depth, dimension and sequential CM") {
  const auto path = edge_ideal(fixture_path());
  CHECK(krull_dimension(path) == 2);
  CHECK(depth_skeleton(path) == 1);
  CHECK(is_sequentially_cm(path));
  const auto whiskered = edge_ideal(fixture_whiskered());
  CHECK(krull_dimension(whiskered) == 4);
  CHECK(depth_skeleton(whiskered) == 3);
  CHECK(is_sequentially_cm(whiskered));
  const auto bip = edge_ideal(fixture_bipartite());
  CHECK(krull_dimension(bip) == 4);
  CHECK(depth_skeleton(bip) == 4);
  CHECK(is_sequentially_cm(parse_ideal("a*b\nc*d\ne*f*g\n")));
  // Two disjoint segments: the pure one-skeleton is disconnected.
  CHECK_FALSE(is_sequentially_cm(parse_ideal("a*c\na*d\nb*c\nb*d\n")));
}

TEST_CASE("depth is unchanged by raising a free variable") {
  const auto path = edge_ideal(fixture_path());
  const auto base = depth_skeleton(path);
  for (Exponent m : {2, 3})
    for (auto v : free_variables(path)) CHECK(depth_skeleton(bump_free_variable(path, v, m)) == base);
}

TEST_CASE("errors and caps") {
  OracleOptions tiny;
  tiny.face_cap = 4;
  CHECK_THROWS_AS(reduced_homology(complex_of({"a", "b", "c"}, {{0, 1, 2}}), tiny), CapExceeded);
  CHECK_THROWS_AS(depth_skeleton(MonomialIdeal({"x"}, {Monomial()})), InputError);
  CHECK_THROWS_AS(stanley_reisner(polarize(edge_ideal(fixture_whiskered())).ideal(), 4), CapExceeded);
}

}  // TEST_SUITE
