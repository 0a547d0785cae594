#include "polyhedral.hpp"

#include <algorithm>
#include <utility>

#include "toricq/error.hpp"

namespace toricq::detail {

std::optional<RatVector> nonnegative_combination(const IntMatrix& columns, const IntVector& target) {
  const std::size_t rows = target.size();
  const std::size_t k = columns.size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw ValidationError("nonnegative_combination: dimension mismatch");
  }
  // Tableau [A | I | b], last row holds reduced costs of the phase-one
  // objective (sum of artificials) and its negated value.
  const std::size_t width = k + rows + 1;
  RatMatrix t(rows + 1, RatVector(width, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? Rational(-columns[j][i]) : Rational(columns[j][i]);
    t[i][k + i] = 1;
    t[i][width - 1] = flip ? Rational(-target[i]) : Rational(target[i]);
    basis[i] = k + i;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[rows][j] -= t[i][j];
    t[rows][width - 1] -= t[i][width - 1];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen in phase one
    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (t[rows][width - 1] != 0) return std::nullopt;
  RatVector lambda(k, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < k) lambda[basis[i]] = t[i][width - 1];
  }
  return lambda;
}

namespace {

struct Ray {
  IntVector v;
  std::vector<bool> tight;  // one flag per processed inequality
};

bool tight_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  // a subset of b
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

ConeGenerators cone_from_inequalities(const IntMatrix& rows, std::size_t dim) {
  IntMatrix lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit_vector(dim, i));
  std::vector<Ray> rays;
  std::size_t processed = 0;

  for (const auto& h : rows) {
    if (h.size() != dim) throw ValidationError("inequality dimension mismatch");
    if (is_zero(h)) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(), [&](const IntVector& l) { return dot(h, l) != 0; });
    if (pivot != lineality.end()) {
      IntVector l = *pivot;
      lineality.erase(pivot);
      Integer hl = dot(h, l);
      if (hl < 0) {
        l = negate(l);
        hl = -hl;
      }
      // Make the remaining lineality and rays orthogonal to h by subtracting
      // multiples of l; positive scaling keeps orientation.
      for (auto& other : lineality) {
        const Integer ho = dot(h, other);
        if (ho != 0) other = primitive(subtract(scale(other, hl), scale(l, ho)));
      }
      for (auto& r : rays) {
        const Integer hr = dot(h, r.v);
        if (hr != 0) r.v = primitive(subtract(scale(r.v, hl), scale(l, hr)));
        r.tight.push_back(true);
      }
      std::vector<bool> l_tight(processed, true);
      l_tight.push_back(false);
      rays.push_back({primitive(l), std::move(l_tight)});
      ++processed;
      continue;
    }

    std::vector<Ray> pos, zero, neg;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : rays) {
      Integer v = dot(h, r.v);
      if (v > 0) {
        pos.push_back(std::move(r));
        pos_val.push_back(std::move(v));
      } else if (v < 0) {
        neg.push_back(std::move(r));
        neg_val.push_back(std::move(v));
      } else {
        zero.push_back(std::move(r));
      }
    }
    std::vector<Ray> next;
    // Adjacency: no third ray's tight set contains the common tight set.
    std::vector<const Ray*> all;
    for (const auto& r : pos) all.push_back(&r);
    for (const auto& r : zero) all.push_back(&r);
    for (const auto& r : neg) all.push_back(&r);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        std::vector<bool> common(processed);
        for (std::size_t b = 0; b < processed; ++b) common[b] = pos[i].tight[b] && neg[j].tight[b];
        bool adjacent = true;
        for (const Ray* other : all) {
          if (other == &pos[i] || other == &neg[j]) continue;
          if (tight_subset(common, other->tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        // pos_val[i] * n - neg_val[j] * p has zero inner product with h.
        IntVector v = primitive(subtract(scale(neg[j].v, pos_val[i]), scale(pos[i].v, neg_val[j])));
        common.push_back(true);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    for (auto& r : pos) {
      r.tight.push_back(false);
      next.push_back(std::move(r));
    }
    for (auto& r : zero) {
      r.tight.push_back(true);
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    ++processed;
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

IntVector project_off(const IntVector& v, const RatMatrix& lineality_rref) {
  if (lineality_rref.empty()) return primitive(v);
  // Solve (L L^T) c = L v, then v - L^T c.
  const std::size_t k = lineality_rref.size();
  RatMatrix gram(k, RatVector(k));
  RatVector rhs(k);
  const RatVector vr = to_rational(v);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(lineality_rref[i], lineality_rref[j]);
    rhs[i] = dot(lineality_rref[i], vr);
  }
  auto c = solve_square(gram, rhs);
  if (!c) throw InvariantError("lineality basis is singular");
  RatVector p = vr;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) p[j] -= (*c)[i] * lineality_rref[i][j];
  }
  return primitive_from_rational(p);
}

IntMatrix canonical_generators(const ConeGenerators& g, std::size_t dim) {
  RatMatrix lin;
  for (const auto& l : g.lineality) lin.push_back(to_rational(l));
  lin = reduced_row_echelon(std::move(lin));
  IntMatrix out;
  for (const auto& row : lin) {
    IntVector b = primitive_from_rational(row);
    out.push_back(negate(b));
    out.push_back(std::move(b));
  }
  for (const auto& r : g.rays) {
    IntVector p = project_off(r, lin);
    if (p.size() != dim) throw InvariantError("ray dimension mismatch");
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toricq::detail
