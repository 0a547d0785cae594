#pragma once

// Binomial toric ideals of monomial maps xi_i -> z^{a_i}.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "toricq/arith.hpp"

namespace toricq {

/// The ordered exponent list A = (a_1, ..., a_k) in Z^n defining
/// phi_A : xi_i -> z^{a_i}. The zero vector (constant monomial) is allowed.
class MonomialMap {
 public:
  MonomialMap() = default;
  MonomialMap(std::size_t ambient_dim, IntMatrix exponents);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t variable_count() const { return exponents_.size(); }
  const IntMatrix& exponents() const { return exponents_; }

  /// sum_i v_i a_i.
  IntVector image(const IntVector& v) const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  IntMatrix exponents_;
};

/// xi^nu - xi^mu with disjoint supports and nu > mu lexicographically.
struct Binomial {
  IntVector nu;
  IntVector mu;

  /// Cancels common factors and orients so that nu > mu. Throws
  /// ValidationError on negative entries, length mismatch, or nu == mu.
  static Binomial normalized(IntVector nu, IntVector mu);

  long degree() const;
  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial& a, const Binomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (a.nu != b.nu) return a.nu < b.nu ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.mu != b.mu) return a.mu < b.mu ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// Which relations nu.A = mu.A are enumerated.
enum class Grading {
  /// Only equal-degree relations (|nu| = |mu|): the ideal of the projective
  /// closure [z^{a_1} : ... : z^{a_k}].
  kHomogeneous,
  /// Every relation, including e.g. 1 - xi_i when a_i = 0.
  kAffine,
};

struct BinomialIdeal {
  MonomialMap map;
  std::vector<Binomial> generators;
  std::size_t degree_bound = 0;
  Grading grading = Grading::kHomogeneous;
};

/// Z-basis of {v in Z^k : sum v_i a_i = 0}, Hermite normal form.  Homogeneous
/// grading also requires sum v_i = 0, i.e. the kernel of homogenize(m).
IntMatrix kernel_lattice(const MonomialMap& m, Grading grading = Grading::kHomogeneous);

/// All binomials xi^nu - xi^mu with disjoint supports, each side of degree at
/// most degree_bound, and nu.A = mu.A; sorted by degree then (nu, mu).
BinomialIdeal toric_ideal_binomials(const MonomialMap& m, std::size_t degree_bound,
                                    Grading grading = Grading::kHomogeneous);

/// Appends a coordinate 1 to every exponent.
MonomialMap homogenize(const MonomialMap& m);

/// Equal-degree monomial relations among [z^{m_0} : ... : z^{m_r}]: the
/// toric ideal of the homogenized map.
BinomialIdeal projective_relations(std::size_t ambient_dim, const IntMatrix& exponents, std::size_t degree_bound);

/// prod point_i^{nu_i} - prod point_i^{mu_i}.
ComplexRational evaluate_binomial(const Binomial& b, const std::vector<ComplexRational>& point);

/// nu.A == mu.A, i.e. the binomial vanishes identically under xi_i -> z^{a_i}.
bool vanishes_on(const Binomial& b, const MonomialMap& m);

/// Human-readable form with 1-based variable names, e.g. "x1*x4 - x2*x3".
std::string to_string(const Binomial& b, const std::string& variable = "x");

}  // namespace toricq
