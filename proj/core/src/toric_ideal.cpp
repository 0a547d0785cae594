#include "toricq/toric_ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "toricq/error.hpp"

namespace toricq {

namespace {

long total_degree(const IntVector& v) {
  long s = 0;
  for (const auto& x : v) s += x.get_si();
  return s;
}

bool disjoint_supports(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

// All exponent vectors in Z^k_{>=0} of total degree <= bound.
void enumerate_monomials(std::size_t k, std::size_t bound, IntMatrix& out) {
  IntVector current(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t e = 0; e <= remaining; ++e) {
      current[pos] = static_cast<unsigned long>(e);
      self(self, pos + 1, remaining - e);
    }
    current[pos] = 0;
  };
  rec(rec, 0, bound);
}

}  // namespace

MonomialMap::MonomialMap(std::size_t ambient_dim, IntMatrix exponents)
    : ambient_dim_(ambient_dim), exponents_(std::move(exponents)) {
  for (const auto& a : exponents_) {
    if (a.size() != ambient_dim_) throw ValidationError("monomial map: exponent vectors must share one dimension");
  }
}

IntVector MonomialMap::image(const IntVector& v) const {
  if (v.size() != exponents_.size()) throw ValidationError("monomial map: wrong number of variables");
  IntVector out(ambient_dim_, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) out[j] += v[i] * exponents_[i][j];
  }
  return out;
}

Binomial Binomial::normalized(IntVector nu, IntVector mu) {
  if (nu.size() != mu.size()) throw ValidationError("binomial: exponent length mismatch");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0 || mu[i] < 0) throw ValidationError("binomial: exponents must be nonnegative");
    const Integer common = std::min(nu[i], mu[i]);
    nu[i] -= common;
    mu[i] -= common;
  }
  if (nu == mu) throw ValidationError("binomial: both sides are equal");
  if (nu < mu) std::swap(nu, mu);
  return Binomial{std::move(nu), std::move(mu)};
}

long Binomial::degree() const { return std::max(total_degree(nu), total_degree(mu)); }

IntMatrix kernel_lattice(const MonomialMap& m, Grading grading) {
  if (grading == Grading::kAffine) return left_integer_kernel(m.exponents(), m.ambient_dim());
  const MonomialMap h = homogenize(m);
  return left_integer_kernel(h.exponents(), h.ambient_dim());
}

BinomialIdeal toric_ideal_binomials(const MonomialMap& m, std::size_t degree_bound, Grading grading) {
  if (degree_bound < 1) throw ValidationError("toric ideal: degree bound must be at least 1");
  IntMatrix monomials;
  enumerate_monomials(m.variable_count(), degree_bound, monomials);

  std::map<std::pair<IntVector, long>, IntMatrix> fibres;
  for (auto& v : monomials) {
    const long deg = grading == Grading::kHomogeneous ? total_degree(v) : 0;
    fibres[{m.image(v), deg}].push_back(std::move(v));
  }

  BinomialIdeal ideal{m, {}, degree_bound, grading};
  for (const auto& [key, members] : fibres) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!(members[j] < members[i])) continue;
        if (!disjoint_supports(members[i], members[j])) continue;
        ideal.generators.push_back(Binomial{members[i], members[j]});
      }
    }
  }
  std::sort(ideal.generators.begin(), ideal.generators.end());
  return ideal;
}

MonomialMap homogenize(const MonomialMap& m) {
  IntMatrix lifted = m.exponents();
  for (auto& a : lifted) a.emplace_back(1);
  return MonomialMap(m.ambient_dim() + 1, std::move(lifted));
}

BinomialIdeal projective_relations(std::size_t ambient_dim, const IntMatrix& exponents, std::size_t degree_bound) {
  return toric_ideal_binomials(homogenize(MonomialMap(ambient_dim, exponents)), degree_bound, Grading::kHomogeneous);
}

ComplexRational evaluate_binomial(const Binomial& b, const std::vector<ComplexRational>& point) {
  if (point.size() != b.nu.size() || point.size() != b.mu.size()) {
    throw ValidationError("evaluate_binomial: point has the wrong number of coordinates");
  }
  ComplexRational left(1), right(1);
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (b.nu[i] != 0) left *= power(point[i], b.nu[i].get_si());
    if (b.mu[i] != 0) right *= power(point[i], b.mu[i].get_si());
  }
  return left - right;
}

bool vanishes_on(const Binomial& b, const MonomialMap& m) { return m.image(b.nu) == m.image(b.mu); }

std::string to_string(const Binomial& b, const std::string& variable) {
  auto side = [&](const IntVector& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (Integer c = 0; c < e[i]; ++c) {
        if (!first) os << '*';
        os << variable << (i + 1);
        first = false;
      }
    }
    if (first) os << '1';
    return os.str();
  };
  return side(b.nu) + " - " + side(b.mu);
}

}  // namespace toricq
