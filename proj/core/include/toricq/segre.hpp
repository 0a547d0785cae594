#pragma once

// Multipartite pure states, the Segre map and its 2x2 minors.
//
// Amplitude tensors are stored row-major: the last party's index varies
// fastest, so for two qubits the order is (a00, a01, a10, a11).

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricq/arith.hpp"

namespace toricq {

using MultiIndex = std::vector<std::size_t>;
using Amplitude = std::complex<double>;

/// Local dimensions (N_1, ..., N_m), m >= 1, every N_j >= 2.
class SystemShape {
 public:
  SystemShape() = default;
  explicit SystemShape(std::vector<std::size_t> levels);

  const std::vector<std::size_t>& levels() const { return levels_; }
  std::size_t parties() const { return levels_.size(); }
  /// prod N_j.
  std::size_t size() const { return size_; }

  std::size_t flat_index(const MultiIndex& k) const;
  MultiIndex multi_index(std::size_t flat) const;

  friend bool operator==(const SystemShape&, const SystemShape&) = default;

 private:
  std::vector<std::size_t> levels_;
  std::size_t size_ = 0;
};

/// A nonzero amplitude tensor over a SystemShape. Scalar is Amplitude for
/// measures or ComplexRational for exact ideal checks.
template <class Scalar>
class PureState {
 public:
  PureState() = default;
  PureState(SystemShape shape, std::vector<Scalar> amplitudes);

  const SystemShape& shape() const { return shape_; }
  const std::vector<Scalar>& amplitudes() const { return amplitudes_; }
  const Scalar& operator[](const MultiIndex& k) const { return amplitudes_[shape_.flat_index(k)]; }

 private:
  SystemShape shape_;
  std::vector<Scalar> amplitudes_;
};

/// One nonzero local vector per party; the j-th has length N_j.
template <class Scalar>
struct ProductState {
  std::vector<std::vector<Scalar>> locals;
};

/// The minor a_k a_l - a_{k'} a_{l'} where k' (l') is k (l) with the
/// coordinate at `mode` taken from l (k).
struct MinorSpec {
  std::size_t mode = 0;
  MultiIndex k;
  MultiIndex l;

  MultiIndex k_swapped() const;
  MultiIndex l_swapped() const;

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

template <class Scalar>
PureState<Scalar> segre_map(const ProductState<Scalar>& p);

template <class Scalar>
Scalar evaluate_minor(const MinorSpec& minor, const PureState<Scalar>& s);

/// Every distinct nontrivial 2x2 minor of the shape. Each minor is listed once
/// (a binomial produced by several modes keeps the lowest mode), oriented so
/// that k is the smallest of its four indices and k < l, and the list is
/// sorted by (mode, k, l).
std::vector<MinorSpec> segre_minors(const SystemShape& shape);

/// sum_j C(N_j, 2) * C(prod_{i != j} N_i, 2): minors before removing those
/// produced by more than one mode.
std::size_t raw_minor_count(const SystemShape& shape);

template <class Scalar>
struct SeparabilityResult {
  bool separable = false;
  /// Largest |minor| over all minors (absolute, not relative).
  double max_violation = 0;
  /// Minor attaining max_violation, when there is at least one minor.
  std::optional<MinorSpec> violating_minor;
  Scalar violating_value{};
  /// Product state whose Segre image is the input; set when separable.
  std::optional<ProductState<Scalar>> witness;
};

/// Separable iff every minor satisfies |minor| <= tol * max|a|^2.
template <class Scalar>
SeparabilityResult<Scalar> is_separable(const PureState<Scalar>& s, double tol);

/// 2 * sqrt(sum_i w_i |minor_i|^2) over segre_minors(); empty weights mean 1
/// for every minor. The state must be normalized to within 1e-9.
double concurrence(const PureState<Amplitude>& s, std::span<const double> weights = {});

PureState<Amplitude> to_floating(const PureState<ComplexRational>& s);

/// "a000*a110 - a010*a100" style rendering (indices concatenated, or comma
/// separated if some N_j > 10).
std::string to_string(const MinorSpec& minor);

// ---- the printed three-qubit generator list --------------------------------

enum class PrintedStatus {
  kMatchesMinor,
  /// Not a 2x2 minor of the three-qubit tensor.
  kNotAMinor,
  /// Same binomial as an earlier entry.
  kDuplicate,
};

struct PrintedGenerator {
  std::string label;  // "g1" ... "g12"
  /// ((a, b), (c, d)) for a_a a_b - a_c a_d, as bit strings.
  std::array<std::array<std::string, 2>, 2> printed;
  PrintedStatus status = PrintedStatus::kMatchesMinor;
  std::optional<MinorSpec> minor;  // set unless kNotAMinor
};

struct ThreeQubitGenerators {
  /// g1..g12 verbatim, each checked against the canonical minors.
  std::vector<PrintedGenerator> printed;
  /// segre_minors({2,2,2}).
  std::vector<MinorSpec> canonical;
  /// Canonical minors that no printed entry matches.
  std::vector<MinorSpec> unlisted;
};

ThreeQubitGenerators three_qubit_generators();

const char* to_string(PrintedStatus s);

}  // namespace toricq
