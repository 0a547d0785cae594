#include "toricq/qubit_toric.hpp"

#include <algorithm>
#include <utility>

#include "toricq/error.hpp"
#include "toricq/monoid.hpp"
#include "toricq/segre.hpp"

namespace toricq {

namespace {

constexpr std::size_t kMaxQubits = 10;

void require_qubits(std::size_t m) {
  if (m < 1 || m > kMaxQubits) throw ValidationError("qubit count must be between 1 and 10");
}

std::size_t first_nonzero(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

// Coefficients c with sum_i c_i rows[i] = target; rows form a square basis.
IntVector coordinates_in(const IntMatrix& basis, const IntVector& target) {
  const std::size_t n = basis.size();
  RatMatrix transposed(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed[j][i] = basis[i][j];
  }
  auto c = solve_square(transposed, to_rational(target));
  if (!c) throw InvariantError("chart coordinates are not a basis");
  auto ints = to_integer(*c);
  if (!ints) throw InvariantError("chart transition is not integral");
  return *ints;
}

Integer determinant(const IntMatrix& rows) {
  RatMatrix m;
  for (const auto& r : rows) m.push_back(to_rational(r));
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.get_num();
}

std::string factor_label(int sign) {
  if (sign > 0) return "{0}";
  if (sign < 0) return "{inf}";
  return "CP^1";
}

}  // namespace

Fan projective_space_fan(std::size_t n) {
  if (n < 1) throw ValidationError("projective_space_fan: n must be positive");
  IntMatrix rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  rays.push_back(IntVector(n, -1));
  // Any n of the n + 1 rays span a maximal cone; every proper subset is a cone.
  std::vector<LatticeCone> cones;
  const std::size_t total = rays.size();
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << total); ++mask) {
    IntMatrix gens;
    for (std::size_t i = 0; i < total; ++i) {
      if (mask >> i & 1) gens.push_back(rays[i]);
    }
    cones.emplace_back(n, std::move(gens));
  }
  return Fan(n, std::move(cones));
}

LatticePolytope multiqubit_polytope(std::size_t m) {
  require_qubits(m);
  IntMatrix verts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    IntVector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = (mask >> i & 1) ? 1 : -1;
    verts.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(m, std::move(verts));
}

LatticePolytope cross_polytope(std::size_t m) {
  require_qubits(m);
  IntMatrix verts;
  for (std::size_t i = 0; i < m; ++i) {
    verts.push_back(unit_vector(m, i));
    verts.push_back(unit_vector(m, i, -1));
  }
  return LatticePolytope::from_vertices(m, std::move(verts));
}

Fan multiqubit_fan(std::size_t m) {
  require_qubits(m);
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= 3;
  std::vector<LatticeCone> cones;
  cones.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    IntMatrix gens;
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i, c /= 3) {
      if (c % 3 == 1) gens.push_back(unit_vector(m, i));
      if (c % 3 == 2) gens.push_back(unit_vector(m, i, -1));
    }
    cones.emplace_back(m, std::move(gens));
  }
  return Fan(m, std::move(cones));
}

ChartAtlas chart_atlas(const Fan& f) {
  const std::size_t n = f.dim();
  ChartAtlas atlas;
  atlas.fan = f;
  for (const auto& cone : maximal_cones(f)) {
    if (cone.generators().size() != n || rank(cone.generators()) != n) {
      throw ValidationError("chart_atlas: maximal cone " + std::to_string(atlas.charts.size()) +
                            " is not a full-dimensional simplicial cone");
    }
    if (abs(determinant(cone.generators())) != 1) {
      throw ValidationError("chart_atlas: maximal cone is simplicial but not unimodular");
    }
    IntMatrix coords = hilbert_basis(dual_cone(cone)).generators;
    std::sort(coords.begin(), coords.end(), [](const IntVector& a, const IntVector& b) {
      const auto ia = first_nonzero(a), ib = first_nonzero(b);
      return ia != ib ? ia < ib : a < b;
    });
    atlas.charts.push_back({cone, std::move(coords)});
  }
  for (std::size_t a = 0; a < atlas.charts.size(); ++a) {
    for (std::size_t b = 0; b < atlas.charts.size(); ++b) {
      if (a == b) continue;
      const auto& ga = atlas.charts[a].cone.generators();
      const auto& gb = atlas.charts[b].cone.generators();
      IntMatrix common;
      std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(common));
      if (rank(common) + 1 != n) continue;
      ChartTransition t{a, b, {}};
      for (const auto& target : atlas.charts[b].coordinates) {
        t.exponents.push_back(coordinates_in(atlas.charts[a].coordinates, target));
      }
      atlas.transitions.push_back(std::move(t));
    }
  }
  return atlas;
}

IntMatrix compose(const IntMatrix& first, const IntMatrix& second) {
  // second expresses the final coordinates through the intermediate ones,
  // first expresses the intermediate coordinates through the initial ones.
  const std::size_t rows = second.size();
  const std::size_t inner = first.size();
  const std::size_t cols = inner ? first.front().size() : 0;
  IntMatrix out(rows, IntVector(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (second[i].size() != inner) throw ValidationError("compose: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += second[i][k] * first[k][j];
    }
  }
  return out;
}

std::vector<InvariantSubvariety> invariant_subvarieties(const Fan& f) {
  if (f.dim() > kMaxQubits || f != multiqubit_fan(f.dim())) {
    throw ValidationError("invariant_subvarieties: only orthant (multi-qubit) fans are supported");
  }
  const std::size_t m = f.dim();
  auto describe = [&](const LatticeCone& c) {
    std::vector<int> signs(m, 0);
    for (const auto& g : c.generators()) {
      const std::size_t i = first_nonzero(g);
      signs[i] = g[i] > 0 ? 1 : -1;
    }
    std::string out;
    for (std::size_t i = 0; i < m; ++i) {
      if (i) out += " x ";
      out += factor_label(signs[i]);
    }
    return out;
  };
  std::vector<InvariantSubvariety> out;
  for (const auto& c : f.cones()) {
    if (c.generators().size() == 1) out.push_back({InvariantSubvariety::Kind::kDivisor, c, describe(c)});
  }
  for (const auto& c : f.cones()) {
    if (c.generators().size() == m) out.push_back({InvariantSubvariety::Kind::kFixedPoint, c, describe(c)});
  }
  return out;
}

ParameterizationMap parameterization(std::size_t m) {
  require_qubits(m);
  ParameterizationMap p;
  p.parties = m;
  for (std::size_t f = 0; f < (std::size_t{1} << m); ++f) {
    IntVector bits(m);
    for (std::size_t j = 0; j < m; ++j) bits[j] = (f >> (m - 1 - j)) & 1;
    p.exponents.push_back(std::move(bits));
  }
  return p;
}

std::vector<ComplexRational> parameterize(const ParameterizationMap& p, const std::vector<ComplexRational>& z) {
  if (z.size() != p.parties) throw ValidationError("parameterize: expected one coordinate per qubit");
  std::vector<ComplexRational> amps;
  amps.reserve(p.exponents.size());
  for (const auto& e : p.exponents) {
    ComplexRational a(1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (e[j] != 0) a *= z[j];
    }
    amps.push_back(std::move(a));
  }
  return amps;
}

bool verify_parameterization(std::size_t m, const std::vector<ComplexRational>& z) {
  require_qubits(m);
  if (z.size() != m) throw ValidationError("verify_parameterization: expected one coordinate per qubit");
  for (const auto& x : z) {
    if (x.is_zero()) throw ValidationError("verify_parameterization: coordinates must be nonzero");
  }
  const SystemShape shape(std::vector<std::size_t>(m, 2));
  const PureState<ComplexRational> state(shape, parameterize(parameterization(m), z));
  const auto minors = segre_minors(shape);
  return std::all_of(minors.begin(), minors.end(),
                     [&](const MinorSpec& minor) { return evaluate_minor(minor, state).is_zero(); });
}

}  // namespace toricq
