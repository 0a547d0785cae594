#pragma once

// Lattice-point monoids of cones and Laurent monomials.

#include <vector>

#include "toricq/arith.hpp"
#include "toricq/lattice_geometry.hpp"

namespace toricq {

/// lambda * z^exponent with lambda != 0. Exponents may be negative.
struct LaurentMonomial {
  IntVector exponent;
  ComplexRational coefficient{1};

  LaurentMonomial() = default;
  LaurentMonomial(IntVector e, ComplexRational c = ComplexRational(1));

  /// Value at a point of the torus (all coordinates nonzero).
  ComplexRational evaluate(const std::vector<ComplexRational>& point) const;

  friend LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b);
  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
};

/// A generating set of the monoid ambient_cone ∩ Z^n.
struct MonoidGenerators {
  LatticeCone ambient_cone;
  IntMatrix generators;
};

/// Unique minimal generating set of c ∩ Z^n, sorted. Throws ValidationError if
/// c is not strongly convex.
MonoidGenerators hilbert_basis(const LatticeCone& c);

/// Whether x is a nonnegative integer combination of g.generators. The
/// generators must span a strongly convex cone (ValidationError otherwise).
bool monoid_contains(const MonoidGenerators& g, const IntVector& x);

/// Simplicial cones (lists of extreme rays) covering a strongly convex cone,
/// obtained by repeatedly coning from the first extreme ray over the facets
/// that do not contain it.
std::vector<IntMatrix> simplicial_subdivision(const LatticeCone& c);

}  // namespace toricq
