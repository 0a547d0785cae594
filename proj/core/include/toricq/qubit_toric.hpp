#pragma once

// Projective-space and multi-qubit toric constructions: fans of CP^n and
// (CP^1)^m, chart atlases with monomial gluing, and the subset-product
// parameterization of the Segre variety of m qubits.

#include <cstddef>
#include <string>
#include <vector>

#include "toricq/arith.hpp"
#include "toricq/lattice_geometry.hpp"

namespace toricq {

struct Chart {
  LatticeCone cone;
  /// Exponent vectors of the chart coordinates: the Hilbert basis of the dual
  /// cone, ordered by the first nonzero coordinate.
  IntMatrix coordinates;
};

/// Coordinates of chart `to` as Laurent monomials in those of chart `from`:
/// row i holds the exponents of to-coordinate i in the from-coordinates.
struct ChartTransition {
  std::size_t from = 0;
  std::size_t to = 0;
  IntMatrix exponents;
};

struct ChartAtlas {
  Fan fan;
  std::vector<Chart> charts;
  /// Both directions for every pair of maximal cones sharing a facet.
  std::vector<ChartTransition> transitions;
};

/// The 2^m subset-indicator exponents of {0,1}^m in lexicographic order, so
/// exponent i is the bit string of amplitude index i.
struct ParameterizationMap {
  std::size_t parties = 0;
  IntMatrix exponents;
};

/// Complete fan of CP^n: maximal cones pos{e_1..e_n} and, for each i, the
/// cone with e_i replaced by -(e_1 + ... + e_n); closed under faces.
Fan projective_space_fan(std::size_t n);

/// Cube with vertices (+-1, ..., +-1), 1 <= m <= 10.
LatticePolytope multiqubit_polytope(std::size_t m);

/// Orthant fan of (CP^1)^m: one cone pos{s_i e_i : s_i != 0} for each sign
/// vector s in {-1, 0, 1}^m, 1 <= m <= 10.
Fan multiqubit_fan(std::size_t m);

/// conv{+-e_1, ..., +-e_m}.
LatticePolytope cross_polytope(std::size_t m);

/// Charts and transitions of a fan whose maximal cones are smooth. Throws
/// ValidationError for non-simplicial or non-unimodular maximal cones.
ChartAtlas chart_atlas(const Fan& f);

/// Product of two transition matrices (apply `first`, then `second`).
IntMatrix compose(const IntMatrix& first, const IntMatrix& second);

struct InvariantSubvariety {
  enum class Kind { kDivisor, kFixedPoint };
  Kind kind;
  LatticeCone cone;
  /// e.g. "{0} x CP^1" for the ray e_1 of the two-qubit fan.
  std::string description;
};

/// Torus-invariant divisors (one per ray) and fixed points (one per maximal
/// cone) of an orthant fan. Throws ValidationError for any other fan.
std::vector<InvariantSubvariety> invariant_subvarieties(const Fan& f);

ParameterizationMap parameterization(std::size_t m);

/// Amplitudes prod_j z_j^{k_j} in row-major order.
std::vector<ComplexRational> parameterize(const ParameterizationMap& p, const std::vector<ComplexRational>& z);

/// Whether the image of z satisfies every minor of segre_minors({2, ..., 2})
/// exactly. Throws ValidationError for a zero coordinate.
bool verify_parameterization(std::size_t m, const std::vector<ComplexRational>& z);

}  // namespace toricq
