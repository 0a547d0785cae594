#include "toricq/lattice_geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "polyhedral.hpp"
#include "toricq/error.hpp"

namespace toricq {

namespace {

void require_dim(const IntMatrix& vectors, std::size_t dim, const char* what) {
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      std::ostringstream os;
      os << what << ": expected dimension " << dim << ", got vector of length " << v.size();
      throw ValidationError(os.str());
    }
  }
}

IntMatrix homogenize(const IntMatrix& points) {
  IntMatrix out;
  out.reserve(points.size());
  for (const auto& p : points) {
    IntVector h = p;
    h.emplace_back(1);
    out.push_back(std::move(h));
  }
  return out;
}

// Index sets of the generators lying on each facet of pos(generators).
std::vector<std::vector<std::size_t>> facet_index_sets(const IntMatrix& generators, std::size_t dim) {
  const auto dual = detail::cone_from_inequalities(generators, dim);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& y : dual.rays) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (dot(y, generators[i]) == 0) tight.push_back(i);
    }
    out.push_back(std::move(tight));
  }
  return out;
}

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Closure of {full} and the facet sets under intersection.
std::set<std::vector<std::size_t>> face_index_lattice(const IntMatrix& generators, std::size_t dim) {
  std::vector<std::size_t> all(generators.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto facets = facet_index_sets(generators, dim);
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& f : facets) {
      auto next = intersect_sorted(cur, f);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

IntMatrix select(const IntMatrix& rows, const std::vector<std::size_t>& idx) {
  IntMatrix out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(rows[i]);
  return out;
}

}  // namespace

// ---- types -----------------------------------------------------------------

LatticeCone::LatticeCone(std::size_t dim, IntMatrix generators) : dim_(dim) {
  if (dim == 0) throw ValidationError("cone: ambient dimension must be positive");
  require_dim(generators, dim, "cone");
  for (auto& g : generators) {
    if (!is_zero(g)) generators_.push_back(primitive(g));
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

LatticePolytope::LatticePolytope(std::size_t dim, IntMatrix points) : dim_(dim) {
  if (dim == 0) throw ValidationError("polytope: ambient dimension must be positive");
  if (points.empty()) throw ValidationError("polytope: at least one point required");
  require_dim(points, dim, "polytope");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // A point is a vertex iff (p,1) is not a nonnegative combination of the
  // other homogenized points.
  const IntMatrix lifted = homogenize(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    IntMatrix others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(lifted[j]);
    }
    if (!detail::nonnegative_combination(others, lifted[i])) vertices_.push_back(points[i]);
  }
}

LatticePolytope LatticePolytope::from_vertices(std::size_t dim, IntMatrix vertices) {
  if (dim == 0) throw ValidationError("polytope: ambient dimension must be positive");
  if (vertices.empty()) throw ValidationError("polytope: at least one point required");
  require_dim(vertices, dim, "polytope");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  LatticePolytope p;
  p.dim_ = dim;
  p.vertices_ = std::move(vertices);
  return p;
}

Fan::Fan(std::size_t dim, std::vector<LatticeCone> cones) : dim_(dim) {
  if (dim == 0) throw ValidationError("fan: ambient dimension must be positive");
  for (const auto& c : cones) {
    if (c.dim() != dim) throw ValidationError("fan: cone dimension mismatch");
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  cones_ = std::move(cones);
}

// ---- cones -----------------------------------------------------------------

bool in_positive_hull(const IntMatrix& generators, const IntVector& x) {
  if (is_zero(x)) return true;
  return detail::nonnegative_combination(generators, x).has_value();
}

LatticeCone pos_hull(std::size_t dim, const IntMatrix& vectors) {
  require_dim(vectors, dim, "pos_hull");
  LatticeCone normalized(dim, vectors);
  IntMatrix gens = normalized.generators();
  for (std::size_t i = 0; i < gens.size();) {
    IntMatrix others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (in_positive_hull(others, gens[i])) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return LatticeCone(dim, std::move(gens));
}

LatticeCone dual_cone(const LatticeCone& c) {
  const auto g = detail::cone_from_inequalities(c.generators(), c.dim());
  return LatticeCone(c.dim(), detail::canonical_generators(g, c.dim()));
}

LatticeCone canonical_form(const LatticeCone& c) { return dual_cone(dual_cone(c)); }

bool same_cone(const LatticeCone& a, const LatticeCone& b) {
  return a.dim() == b.dim() && canonical_form(a) == canonical_form(b);
}

bool cone_contains(const LatticeCone& c, const IntVector& x) {
  if (x.size() != c.dim()) throw ValidationError("cone_contains: dimension mismatch");
  const LatticeCone d = dual_cone(c);
  return std::all_of(d.generators().begin(), d.generators().end(),
                     [&](const IntVector& y) { return dot(x, y) >= 0; });
}

bool is_strongly_convex(const LatticeCone& c) {
  if (c.is_zero_cone()) return true;
  // A line exists iff 0 is a nontrivial nonnegative combination, i.e. iff
  // (0, 1) is a nonnegative combination of the lifted generators (g, 1).
  const IntMatrix lifted = homogenize(c.generators());
  IntVector target(c.dim() + 1, 0);
  target.back() = 1;
  return !detail::nonnegative_combination(lifted, target).has_value();
}

bool is_simplicial(const LatticeCone& c) {
  const LatticeCone h = pos_hull(c.dim(), c.generators());
  return rank(h.generators()) == h.generators().size();
}

std::size_t cone_dimension(const LatticeCone& c) { return rank(c.generators()); }

std::vector<Face> faces(const LatticeCone& c) {
  const auto lattice = face_index_lattice(c.generators(), c.dim());
  std::vector<Face> out;
  for (const auto& idx : lattice) {
    out.push_back({idx, rank(select(c.generators(), idx))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeCone face_cone(const LatticeCone& c, const Face& f) {
  return LatticeCone(c.dim(), select(c.generators(), f.indices));
}

LatticeCone intersect(const LatticeCone& a, const LatticeCone& b) {
  if (a.dim() != b.dim()) throw ValidationError("intersect: dimension mismatch");
  IntMatrix rows = dual_cone(a).generators();
  const IntMatrix more = dual_cone(b).generators();
  rows.insert(rows.end(), more.begin(), more.end());
  const auto g = detail::cone_from_inequalities(rows, a.dim());
  return LatticeCone(a.dim(), detail::canonical_generators(g, a.dim()));
}

// ---- polytopes -------------------------------------------------------------

bool is_full_dimensional(const LatticePolytope& p) {
  return rank(homogenize(p.vertices())) == p.dim() + 1;
}

std::vector<Halfspace> facet_inequalities(const LatticePolytope& p) {
  if (!is_full_dimensional(p)) throw ValidationError("polytope is not full-dimensional");
  const auto dual = detail::cone_from_inequalities(homogenize(p.vertices()), p.dim() + 1);
  if (!dual.lineality.empty()) throw InvariantError("full-dimensional polytope has dual lineality");
  std::vector<Halfspace> out;
  for (const auto& r : dual.rays) {
    Halfspace h;
    h.normal.assign(r.begin(), r.end() - 1);
    h.offset = r.back();
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
    return a.normal < b.normal || (a.normal == b.normal && a.offset < b.offset);
  });
  return out;
}

bool origin_in_interior(const LatticePolytope& p) {
  if (!is_full_dimensional(p)) return false;
  const auto facets = facet_inequalities(p);
  return std::all_of(facets.begin(), facets.end(), [](const Halfspace& h) { return h.offset > 0; });
}

LatticePolytope polar(const LatticePolytope& p) {
  if (!origin_in_interior(p)) throw ValidationError("polar: origin is not in the interior of the polytope");
  // Facet <a,x> + b >= 0 with b > 0 gives the polar vertex a / b.
  IntMatrix verts;
  for (const auto& h : facet_inequalities(p)) {
    IntVector v(h.normal.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!mpz_divisible_p(h.normal[i].get_mpz_t(), h.offset.get_mpz_t())) {
        throw ValidationError("polar: result is not a lattice polytope (vertex " + to_string(h.normal) + "/" +
                              h.offset.get_str() + ")");
      }
      v[i] = h.normal[i] / h.offset;
    }
    verts.push_back(std::move(v));
  }
  return LatticePolytope(p.dim(), std::move(verts));
}

std::vector<Face> faces(const LatticePolytope& p) {
  const IntMatrix lifted = homogenize(p.vertices());
  const auto lattice = face_index_lattice(lifted, p.dim() + 1);
  std::vector<Face> out;
  for (const auto& idx : lattice) {
    if (idx.empty()) continue;
    out.push_back({idx, rank(select(lifted, idx)) - 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan normal_fan(const LatticePolytope& p) {
  if (!is_full_dimensional(p)) throw ValidationError("normal_fan: polytope is not full-dimensional");
  const auto facets = facet_inequalities(p);
  std::vector<LatticeCone> cones;
  for (const auto& f : faces(p)) {
    IntMatrix normals;
    for (const auto& h : facets) {
      const bool contains = std::all_of(f.indices.begin(), f.indices.end(), [&](std::size_t i) {
        return dot(h.normal, p.vertices()[i]) + h.offset == 0;
      });
      if (contains) normals.push_back(negate(h.normal));
    }
    cones.push_back(pos_hull(p.dim(), normals));
  }
  return Fan(p.dim(), std::move(cones));
}

// ---- fans ------------------------------------------------------------------

std::vector<LatticeCone> maximal_cones(const Fan& f) {
  std::vector<LatticeCone> out;
  const auto& cones = f.cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto& gi = cones[i].generators();
    bool maximal = true;
    for (std::size_t j = cones.size(); j-- > 0;) {
      const auto& gj = cones[j].generators();
      if (j == i || gj.size() <= gi.size()) continue;
      if (std::includes(gj.begin(), gj.end(), gi.begin(), gi.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(cones[i]);
  }
  return out;
}

std::string check_fan(const Fan& f) {
  std::set<LatticeCone> members(f.cones().begin(), f.cones().end());
  for (const auto& c : f.cones()) {
    if (!is_strongly_convex(c)) return "cone " + std::to_string(c.generators().size()) + "-generated is not strongly convex";
    if (pos_hull(c.dim(), c.generators()) != c) return "cone generators are not its extreme rays";
    for (const auto& face : faces(c)) {
      if (!members.count(face_cone(c, face))) return "fan is not closed under taking faces";
    }
  }
  // Pairwise intersections of maximal cones; smaller cones inherit the
  // property through face closure.
  const auto maximal = maximal_cones(f);
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      const LatticeCone meet = intersect(maximal[i], maximal[j]);
      for (const auto* side : {&maximal[i], &maximal[j]}) {
        bool is_face = false;
        for (const auto& face : faces(*side)) {
          if (face_cone(*side, face) == meet) {
            is_face = true;
            break;
          }
        }
        if (!is_face) return "intersection of two maximal cones is not a common face";
      }
    }
  }
  return {};
}

}  // namespace toricq
