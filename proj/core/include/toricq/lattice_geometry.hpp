#pragma once

// Exact convex geometry over the integer lattice: cones, polytopes, faces,
// duals, polars and normal fans.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "toricq/arith.hpp"

namespace toricq {

/// A finitely generated rational polyhedral cone pos{g_1, ..., g_k} in R^dim.
///
/// Construction normalizes the generator list: zero vectors are dropped, every
/// generator is replaced by its primitive representative, and the list is
/// sorted lexicographically without duplicates. An empty list is the cone {0}.
/// Redundant generators are kept; see pos_hull() and canonical_form().
class LatticeCone {
 public:
  LatticeCone() = default;
  LatticeCone(std::size_t dim, IntMatrix generators);

  std::size_t dim() const { return dim_; }
  const IntMatrix& generators() const { return generators_; }
  bool is_zero_cone() const { return generators_.empty(); }

  /// Literal equality of normalized generator lists. For geometric equality
  /// use same_cone().
  friend bool operator==(const LatticeCone&, const LatticeCone&) = default;
  friend auto operator<=>(const LatticeCone& a, const LatticeCone& b) {
    if (a.generators_.size() != b.generators_.size()) return a.generators_.size() <=> b.generators_.size();
    if (a.generators_ < b.generators_) return std::strong_ordering::less;
    if (b.generators_ < a.generators_) return std::strong_ordering::greater;
    return a.dim_ <=> b.dim_;
  }

 private:
  std::size_t dim_ = 0;
  IntMatrix generators_;
};

/// The convex hull of finitely many lattice points, stored by its vertices
/// (sorted lexicographically). Construction discards non-extreme points.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  LatticePolytope(std::size_t dim, IntMatrix points);

  /// Skips the extreme-point filter; the caller guarantees that every point
  /// is a vertex (used for cubes and cross-polytopes of large dimension).
  static LatticePolytope from_vertices(std::size_t dim, IntMatrix vertices);

  std::size_t dim() const { return dim_; }
  const IntMatrix& vertices() const { return vertices_; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  std::size_t dim_ = 0;
  IntMatrix vertices_;
};

/// A face of a cone or polytope, identified by the sorted indices of the
/// parent's generators (or vertices) it contains.
struct Face {
  std::vector<std::size_t> indices;
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim <=> b.dim;
    return a.indices <=> b.indices;
  }
};

/// A finite collection of cones in R^dim. Cones are kept in canonical order
/// (by generator count, then lexicographically). Use check_fan() to verify the
/// face-closure and intersection axioms.
class Fan {
 public:
  Fan() = default;
  Fan(std::size_t dim, std::vector<LatticeCone> cones);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeCone>& cones() const { return cones_; }

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeCone> cones_;
};

/// An inequality <normal, x> + offset >= 0.
struct Halfspace {
  IntVector normal;
  Integer offset;
};

// ---- cones -----------------------------------------------------------------

/// Cone generated by the vectors, with redundant generators removed greedily
/// (in lexicographic order). For strongly convex cones the result is the set
/// of primitive extreme rays.
LatticeCone pos_hull(std::size_t dim, const IntMatrix& vectors);

/// Exact test x in pos(generators) by LP feasibility.
bool in_positive_hull(const IntMatrix& generators, const IntVector& x);

/// {y : <x, y> >= 0 for all x in c}, in canonical form.
LatticeCone dual_cone(const LatticeCone& c);

/// Unique generator list of a cone: +-(primitive RREF basis) of the lineality
/// space plus the primitive extreme rays projected orthogonally to it. Two
/// cones are equal as sets iff their canonical forms are equal.
LatticeCone canonical_form(const LatticeCone& c);
bool same_cone(const LatticeCone& a, const LatticeCone& b);

/// Membership via the inequality description (dual cone generators).
bool cone_contains(const LatticeCone& c, const IntVector& x);

bool is_strongly_convex(const LatticeCone& c);
/// True iff the irredundant generators are linearly independent.
bool is_simplicial(const LatticeCone& c);
/// Dimension of the linear span.
std::size_t cone_dimension(const LatticeCone& c);

/// Every face including the cone itself and its minimal face (the apex {0}
/// for strongly convex cones). Indices refer to c.generators().
std::vector<Face> faces(const LatticeCone& c);

/// Cone generated by the given generator indices of c.
LatticeCone face_cone(const LatticeCone& c, const Face& f);

// ---- polytopes -------------------------------------------------------------

/// Facet inequalities of a full-dimensional polytope, sorted by normal.
std::vector<Halfspace> facet_inequalities(const LatticePolytope& p);

bool is_full_dimensional(const LatticePolytope& p);
bool origin_in_interior(const LatticePolytope& p);

/// {y : <x, y> >= -1 for all x in p}. Throws ValidationError when the origin is
/// not interior or when the polar has a non-integral vertex.
LatticePolytope polar(const LatticePolytope& p);

/// Nonempty faces including p itself (the empty face is not listed). Indices
/// refer to p.vertices().
std::vector<Face> faces(const LatticePolytope& p);

/// One cone of outer normals per nonempty face. Throws ValidationError when p
/// is not full-dimensional.
Fan normal_fan(const LatticePolytope& p);

// ---- fans ------------------------------------------------------------------

/// Cones of the fan that are not faces of another cone of the fan.
std::vector<LatticeCone> maximal_cones(const Fan& f);

/// Empty string when f is a fan of strongly convex cones closed under faces
/// with pairwise face intersections; otherwise a description of the first
/// violation found.
std::string check_fan(const Fan& f);

/// Intersection of two cones, canonical form.
LatticeCone intersect(const LatticeCone& a, const LatticeCone& b);

}  // namespace toricq
