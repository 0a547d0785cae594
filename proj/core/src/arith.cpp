#include "toricq/arith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toricq/error.hpp"

namespace toricq {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector unit_vector(std::size_t dim, std::size_t axis, long sign) {
  IntVector v(dim, 0);
  v.at(axis) = sign;
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ValidationError("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw ValidationError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ValidationError("add: dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ValidationError("subtract: dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector negate(const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

IntVector scale(const IntVector& v, const Integer& factor) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
  return r;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

IntVector primitive_from_rational(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * l;
    r[i] = scaled.get_num();
  }
  return primitive(r);
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

std::optional<IntVector> to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

RatMatrix reduced_row_echelon(RatMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rational inv = 1 / rows[pivot_row][c];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const RatMatrix& rows) { return reduced_row_echelon(rows).size(); }

std::size_t rank(const IntMatrix& rows) {
  RatMatrix r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.push_back(to_rational(row));
  return rank(r);
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows pivot_row..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[pivot_row][k];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntMatrix left_integer_kernel(const IntMatrix& rows, std::size_t row_length) {
  const std::size_t k = rows.size();
  // Augment [rows | I_k] and row-reduce over Z; rows whose left block vanishes
  // carry kernel vectors in the right block, and they form a Z-basis because
  // the transformation is unimodular.
  IntMatrix aug(k, IntVector(row_length + k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != row_length) throw ValidationError("kernel: exponent dimension mismatch");
    for (std::size_t j = 0; j < row_length; ++j) aug[i][j] = rows[i][j];
    aug[i][row_length + i] = 1;
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < row_length && pivot_row < k; ++c) {
    while (true) {
      std::size_t best = k;
      for (std::size_t r = pivot_row; r < k; ++r) {
        if (aug[r][c] == 0) continue;
        if (best == k || abs(aug[r][c]) < abs(aug[best][c])) best = r;
      }
      if (best == k) break;
      std::swap(aug[pivot_row], aug[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < k; ++r) {
        if (aug[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), aug[r][c].get_mpz_t(), aug[pivot_row][c].get_mpz_t());
        for (auto j = c; j < aug[r].size(); ++j) aug[r][j] -= q * aug[pivot_row][j];
        if (aug[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (aug[pivot_row][c] != 0) ++pivot_row;
  }
  IntMatrix basis;
  for (std::size_t r = pivot_row; r < k; ++r) {
    basis.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(row_length), aug[r].end());
  }
  return hermite_normal_form(std::move(basis));
}

std::optional<RatVector> solve_square(const RatMatrix& m, const RatVector& b) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(aug[c], aug[sel]);
    const Rational inv = 1 / aug[c][c];
    for (std::size_t k = c; k <= n; ++k) aug[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

ComplexRational ComplexRational::inverse() const {
  const Rational n = norm2();
  if (n == 0) throw ValidationError("inverse of zero");
  return {re / n, -im / n};
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational power(const ComplexRational& z, long exponent) {
  ComplexRational base = z;
  if (exponent < 0) {
    if (z.is_zero()) throw ValidationError("negative power of zero");
    base = z.inverse();
    exponent = -exponent;
  }
  ComplexRational result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
  return os << z.re << (z.im < 0 ? "-" : "+") << abs(z.im) << "i";
}

}  // namespace toricq
