#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wog/ideal.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

/// Coefficient field: the rationals or Z/p.
struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Prime;
  std::uint32_t modulus = 2;

  static Field rationals() { return {Kind::Rational, 0}; }
  static Field prime(std::uint32_t p);  // throws InputError unless p is prime
  /// Accepts `q`, `f2`, `f<p>`.
  static Field parse(std::string_view text);
  std::string name() const;
  friend bool operator==(const Field&, const Field&) = default;
};

/// Facets over a vertex list. A complex with no facets is void; one whose
/// only facet is empty is {∅}.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<VertexSet> facets;

  int dimension() const;
  bool is_pure() const;
};

/// Keeps only inclusion-maximal sets, sorted.
SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<VertexSet> sets);

/// Running totals of the internal consistency checks.
struct OracleAudit {
  std::size_t complexes = 0;
  std::size_t boundary_violations = 0;  // some composite boundary map nonzero
  std::size_t euler_violations = 0;     // face counts and ranks disagree
  std::size_t cm_impure = 0;            // a CM verdict on a complex with unequal facets
  void merge(const OracleAudit& o);
  bool clean() const { return boundary_violations == 0 && euler_violations == 0 && cm_impure == 0; }
};

struct OracleOptions {
  Field field{};
  std::size_t face_cap = std::size_t{1} << 20;
  std::size_t cover_cap = 24;
  bool check_boundary = true;
  OracleAudit* audit = nullptr;
};

/// ranks[k + 1] is the rank of reduced homology in dimension k.
struct HomologyProfile {
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> face_counts;  // same indexing, face_counts[0] = 1 for the empty face
  bool boundary_ok = true;
  bool euler_ok = true;
};

/// Facets are the complements of the minimal vertex covers.
SimplicialComplex stanley_reisner(const MonomialIdeal& squarefree, std::size_t cover_cap = 24);

HomologyProfile reduced_homology(const SimplicialComplex& c, const OracleOptions& opt = {});

/// Reisner: every link has vanishing reduced homology below its dimension.
bool is_cm_complex(const SimplicialComplex& c, const OracleOptions& opt = {});
bool is_cm_reisner(const MonomialIdeal& squarefree, const OracleOptions& opt = {});

/// CM test for any monomial ideal through its polarization.
bool oracle_cm_monomial(const MonomialIdeal& ideal, const OracleOptions& opt = {});

/// Krull dimension of R/I: size of the largest face of the polarized
/// complex minus the extra polarization variables.
std::size_t krull_dimension(const MonomialIdeal& ideal, std::size_t cover_cap = 24);

/// depth(R/I) from the largest CM skeleton of the polarized complex,
/// shifted back by the number of extra polarization variables.
std::size_t depth_skeleton(const MonomialIdeal& ideal, const OracleOptions& opt = {});

/// Every pure skeleton of the polarized complex is CM.
bool is_sequentially_cm(const MonomialIdeal& ideal, const OracleOptions& opt = {});

}  // namespace wog
