#include "toricq/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "toricq/error.hpp"

namespace toricq {

namespace {

// Upper bound on the number of points scanned per fundamental parallelepiped.
constexpr double kMaxBoxPoints = 5e7;

bool satisfies(const IntMatrix& inequalities, const IntVector& x) {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const IntVector& h) { return dot(h, x) >= 0; });
}

IntVector grading(const IntMatrix& dual_generators, std::size_t dim) {
  IntVector w(dim, 0);
  for (const auto& y : dual_generators) w = add(w, y);
  return w;
}

// Nonzero lattice points sum_i lambda_i v_i with 0 <= lambda_i < 1, plus the
// v_i themselves.
void parallelepiped_points(const IntMatrix& simplex, std::size_t dim, std::set<IntVector>& out) {
  const std::size_t d = simplex.size();
  // Pick d coordinates on which the generators are independent.
  std::vector<std::size_t> coords;
  RatMatrix picked;
  for (std::size_t c = 0; c < dim && coords.size() < d; ++c) {
    RatVector row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = simplex[i][c];
    picked.push_back(row);
    if (rank(picked) == coords.size() + 1) {
      coords.push_back(c);
    } else {
      picked.pop_back();
    }
  }
  if (coords.size() != d) throw InvariantError("simplicial cone generators are dependent");

  // adjugate-style integer inverse: lambda = scaled_inverse * x_sel / det.
  RatMatrix inverse(d, RatVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    RatVector e(d, 0);
    e[j] = 1;
    auto col = solve_square(picked, e);
    if (!col) throw InvariantError("singular coordinate block");
    for (std::size_t i = 0; i < d; ++i) inverse[i][j] = (*col)[i];
  }
  Integer denom = 1;
  for (const auto& row : inverse) {
    for (const auto& x : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  }
  IntMatrix scaled(d, IntVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational s = inverse[i][j] * denom;
      scaled[i][j] = s.get_num();
    }
  }

  std::vector<long> lo(d), hi(d);
  double volume = 1;
  for (std::size_t k = 0; k < d; ++k) {
    Integer l = 0, h = 0;
    for (const auto& v : simplex) {
      const Integer& x = v[coords[k]];
      if (x < 0) l += x;
      else h += x;
    }
    if (!l.fits_slong_p() || !h.fits_slong_p()) throw ValidationError("hilbert_basis: generators too large");
    lo[k] = l.get_si();
    hi[k] = h.get_si();
    volume *= static_cast<double>(hi[k] - lo[k] + 1);
  }
  if (volume > kMaxBoxPoints) throw ValidationError("hilbert_basis: cone too large for parallelepiped enumeration");

  for (const auto& v : simplex) out.insert(v);

  std::vector<long> x(lo);
  IntVector num(d);
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      num[i] = 0;
      for (std::size_t j = 0; j < d; ++j) num[i] += scaled[i][j] * x[j];
      if (num[i] < 0 || num[i] >= denom) inside = false;
    }
    if (inside) {
      IntVector point(dim, 0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < dim; ++c) point[c] += num[i] * simplex[i][c];
      }
      bool integral = true;
      for (auto& p : point) {
        if (!mpz_divisible_p(p.get_mpz_t(), denom.get_mpz_t())) {
          integral = false;
          break;
        }
        mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), denom.get_mpz_t());
      }
      if (integral && !is_zero(point)) out.insert(std::move(point));
    }
    std::size_t k = 0;
    while (k < d && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
}

}  // namespace

LaurentMonomial::LaurentMonomial(IntVector e, ComplexRational c) : exponent(std::move(e)), coefficient(std::move(c)) {
  if (coefficient.is_zero()) throw ValidationError("Laurent monomial coefficient must be nonzero");
}

ComplexRational LaurentMonomial::evaluate(const std::vector<ComplexRational>& point) const {
  if (point.size() != exponent.size()) throw ValidationError("monomial evaluation: dimension mismatch");
  ComplexRational value = coefficient;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!exponent[i].fits_slong_p()) throw ValidationError("monomial exponent too large");
    value *= power(point[i], exponent[i].get_si());
  }
  return value;
}

LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b) {
  return LaurentMonomial(add(a.exponent, b.exponent), a.coefficient * b.coefficient);
}

std::vector<IntMatrix> simplicial_subdivision(const LatticeCone& c) {
  const LatticeCone hull = pos_hull(c.dim(), c.generators());
  const IntMatrix& rays = hull.generators();
  if (rays.empty()) return {};
  const std::size_t d = rank(rays);
  if (rays.size() == d) return {rays};
  std::vector<IntMatrix> out;
  for (const auto& f : faces(hull)) {
    if (f.dim + 1 != d || std::binary_search(f.indices.begin(), f.indices.end(), std::size_t{0})) continue;
    for (auto simplex : simplicial_subdivision(face_cone(hull, f))) {
      simplex.push_back(rays[0]);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

MonoidGenerators hilbert_basis(const LatticeCone& c) {
  if (!is_strongly_convex(c)) throw ValidationError("hilbert_basis: cone is not strongly convex");
  MonoidGenerators result{c, {}};
  if (c.is_zero_cone()) return result;

  const IntMatrix inequalities = dual_cone(c).generators();
  const IntVector w = grading(inequalities, c.dim());

  std::set<IntVector> candidates;
  for (const auto& simplex : simplicial_subdivision(c)) parallelepiped_points(simplex, c.dim(), candidates);

  std::vector<std::pair<Integer, IntVector>> by_degree;
  by_degree.reserve(candidates.size());
  for (const auto& x : candidates) by_degree.emplace_back(dot(w, x), x);
  std::sort(by_degree.begin(), by_degree.end());

  // x is reducible iff x - b lies in the cone for some irreducible b of lower
  // degree.
  IntMatrix basis;
  for (const auto& [deg, x] : by_degree) {
    const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const IntVector& b) {
      return satisfies(inequalities, subtract(x, b));
    });
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  result.generators = std::move(basis);
  return result;
}

bool monoid_contains(const MonoidGenerators& g, const IntVector& x) {
  if (x.size() != g.ambient_cone.dim()) throw ValidationError("monoid_contains: dimension mismatch");
  if (is_zero(x)) return true;
  IntMatrix gens;
  for (const auto& v : g.generators) {
    if (v.size() != x.size()) throw ValidationError("monoid_contains: dimension mismatch");
    if (!is_zero(v)) gens.push_back(v);
  }
  if (gens.empty()) return false;
  const LatticeCone span(x.size(), gens);
  if (!is_strongly_convex(span)) throw ValidationError("monoid_contains: generators span a cone containing a line");
  const IntMatrix inequalities = dual_cone(span).generators();
  if (!satisfies(inequalities, x)) return false;

  // Every partial remainder of a decomposition lies in pos(gens), and each
  // subtraction strictly lowers the positive grading, so the search is finite.
  std::map<IntVector, bool> memo;
  auto reach = [&](auto&& self, const IntVector& y) -> bool {
    if (is_zero(y)) return true;
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& v : gens) {
      IntVector rest = subtract(y, v);
      if (satisfies(inequalities, rest) && self(self, rest)) {
        ok = true;
        break;
      }
    }
    memo.emplace(y, ok);
    return ok;
  };
  return reach(reach, x);
}

}  // namespace toricq
