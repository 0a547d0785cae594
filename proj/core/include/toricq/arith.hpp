#pragma once

// Exact integer / rational vector arithmetic shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toricq {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Z^n. Entries may be negative.
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
/// Row-major list of integer rows.
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

IntVector make_int_vector(std::initializer_list<long> values);
IntVector unit_vector(std::size_t dim, std::size_t axis, long sign = 1);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const IntVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& v);
IntVector scale(const IntVector& v, const Integer& factor);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);
/// v divided by its content. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
bool is_primitive(const IntVector& v);
/// Smallest positive multiple of v with integer entries, made primitive.
IntVector primitive_from_rational(const RatVector& v);

RatVector to_rational(const IntVector& v);
/// Exact conversion; nullopt if some entry has a non-unit denominator.
std::optional<IntVector> to_integer(const RatVector& v);

/// Rank over Q.
std::size_t rank(const IntMatrix& rows);
std::size_t rank(const RatMatrix& rows);

/// Reduced row echelon form over Q with zero rows dropped. Canonical for the
/// row space.
RatMatrix reduced_row_echelon(RatMatrix rows);

/// Row-style Hermite normal form of the lattice spanned by the rows. Zero rows
/// are dropped; pivots positive; entries above pivots reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Z-basis of {v in Z^k : sum_i v_i * rows[i] = 0} where rows has k entries
/// of common length n, returned in Hermite normal form.
IntMatrix left_integer_kernel(const IntMatrix& rows, std::size_t row_length);

/// Solve M x = b exactly for square invertible M; nullopt if singular.
std::optional<RatVector> solve_square(const RatMatrix& m, const RatVector& b);

std::string to_string(const IntVector& v);

/// Exact Gaussian rational a + b i.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {
    re.canonicalize();
    im.canonicalize();
  }
  ComplexRational(long real) : re(real), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  /// |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }
  ComplexRational conj() const { return {re, -im}; }
  ComplexRational inverse() const;

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

/// z^e for integer e; throws ValidationError when z == 0 and e < 0.
ComplexRational power(const ComplexRational& z, long exponent);

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

}  // namespace toricq
