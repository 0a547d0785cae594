#include "toricq/segre.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "toricq/error.hpp"

namespace toricq {

namespace {

// |z|^2 as a double, and exact comparisons where the scalar allows them.
double norm2(const Amplitude& z) { return std::norm(z); }
double norm2(const ComplexRational& z) { return z.norm2().get_d(); }

bool is_zero_scalar(const Amplitude& z) { return z == Amplitude(0); }
bool is_zero_scalar(const ComplexRational& z) { return z.is_zero(); }

Amplitude inverse(const Amplitude& z) { return 1.0 / z; }
ComplexRational inverse(const ComplexRational& z) { return z.inverse(); }

// |minor| <= tol * reference, with reference = max |a|^2.
bool within(const Amplitude& minor, const Amplitude& largest, double tol) {
  return std::abs(minor) <= tol * std::norm(largest);
}
bool within(const ComplexRational& minor, const ComplexRational& largest, double tol) {
  // Squared comparison keeps it exact: |m|^2 <= tol^2 |a|^4.
  const Rational t(tol);
  const Rational ref = largest.norm2();
  return minor.norm2() <= t * t * ref * ref;
}

std::size_t binomial2(std::size_t n) { return n * (n - 1) / 2; }

using MonomialKey = std::pair<std::size_t, std::size_t>;
using BinomialKey = std::pair<MonomialKey, MonomialKey>;

MonomialKey monomial_key(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }
BinomialKey binomial_key(MonomialKey a, MonomialKey b) { return {std::min(a, b), std::max(a, b)}; }

BinomialKey key_of(const SystemShape& shape, const MinorSpec& m) {
  return binomial_key(monomial_key(shape.flat_index(m.k), shape.flat_index(m.l)),
                      monomial_key(shape.flat_index(m.k_swapped()), shape.flat_index(m.l_swapped())));
}

MultiIndex parse_bits(const std::string& bits) {
  MultiIndex k;
  for (char c : bits) k.push_back(static_cast<std::size_t>(c - '0'));
  return k;
}

}  // namespace

// ---- shapes and states -----------------------------------------------------

SystemShape::SystemShape(std::vector<std::size_t> levels) : levels_(std::move(levels)), size_(1) {
  if (levels_.empty()) throw ValidationError("shape: at least one party required");
  for (auto n : levels_) {
    if (n < 2) throw ValidationError("shape: every party needs at least two levels");
    size_ *= n;
  }
}

std::size_t SystemShape::flat_index(const MultiIndex& k) const {
  if (k.size() != levels_.size()) throw ValidationError("index has the wrong number of parties");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] >= levels_[j]) throw ValidationError("index out of range for shape");
    flat = flat * levels_[j] + k[j];
  }
  return flat;
}

MultiIndex SystemShape::multi_index(std::size_t flat) const {
  MultiIndex k(levels_.size());
  for (std::size_t j = levels_.size(); j-- > 0;) {
    k[j] = flat % levels_[j];
    flat /= levels_[j];
  }
  return k;
}

template <class Scalar>
PureState<Scalar>::PureState(SystemShape shape, std::vector<Scalar> amplitudes)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != shape_.size()) throw ValidationError("state: amplitude count does not match shape");
  if (std::all_of(amplitudes_.begin(), amplitudes_.end(), [](const Scalar& a) { return is_zero_scalar(a); })) {
    throw ValidationError("state: all amplitudes are zero");
  }
}

MultiIndex MinorSpec::k_swapped() const {
  MultiIndex r = k;
  r.at(mode) = l.at(mode);
  return r;
}

MultiIndex MinorSpec::l_swapped() const {
  MultiIndex r = l;
  r.at(mode) = k.at(mode);
  return r;
}

template <class Scalar>
PureState<Scalar> segre_map(const ProductState<Scalar>& p) {
  std::vector<std::size_t> levels;
  for (const auto& v : p.locals) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& a) { return is_zero_scalar(a); })) {
      throw ValidationError("segre_map: local vector is zero");
    }
    levels.push_back(v.size());
  }
  SystemShape shape(levels);
  std::vector<Scalar> amps(shape.size());
  for (std::size_t f = 0; f < shape.size(); ++f) {
    const MultiIndex k = shape.multi_index(f);
    Scalar a = p.locals[0][k[0]];
    for (std::size_t j = 1; j < k.size(); ++j) a *= p.locals[j][k[j]];
    amps[f] = a;
  }
  return PureState<Scalar>(std::move(shape), std::move(amps));
}

template <class Scalar>
Scalar evaluate_minor(const MinorSpec& m, const PureState<Scalar>& s) {
  return s[m.k] * s[m.l] - s[m.k_swapped()] * s[m.l_swapped()];
}

// ---- minors ----------------------------------------------------------------

std::size_t raw_minor_count(const SystemShape& shape) {
  std::size_t total = 0;
  for (std::size_t j = 0; j < shape.parties(); ++j) {
    total += binomial2(shape.levels()[j]) * binomial2(shape.size() / shape.levels()[j]);
  }
  return total;
}

std::vector<MinorSpec> segre_minors(const SystemShape& shape) {
  std::set<BinomialKey> seen;
  std::vector<MinorSpec> out;
  for (std::size_t j = 0; j < shape.parties(); ++j) {
    const std::size_t rest_size = shape.size() / shape.levels()[j];
    auto with_mode = [&](std::size_t rest_flat, std::size_t value) {
      MultiIndex k(shape.parties());
      for (std::size_t i = shape.parties(); i-- > 0;) {
        if (i == j) {
          k[i] = value;
          continue;
        }
        const std::size_t n = shape.levels()[i];
        k[i] = rest_flat % n;
        rest_flat /= n;
      }
      return k;
    };
    for (std::size_t a = 0; a < shape.levels()[j]; ++a) {
      for (std::size_t b = a + 1; b < shape.levels()[j]; ++b) {
        for (std::size_t r = 0; r < rest_size; ++r) {
          for (std::size_t s = r + 1; s < rest_size; ++s) {
            const MultiIndex ar = with_mode(r, a), bs = with_mode(s, b);
            const MultiIndex br = with_mode(r, b), as = with_mode(s, a);
            const MonomialKey first = monomial_key(shape.flat_index(ar), shape.flat_index(bs));
            const MonomialKey second = monomial_key(shape.flat_index(br), shape.flat_index(as));
            if (!seen.insert(binomial_key(first, second)).second) continue;
            const MonomialKey lead = std::min(first, second);
            out.push_back(MinorSpec{j, shape.multi_index(lead.first), shape.multi_index(lead.second)});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const MinorSpec& x, const MinorSpec& y) {
    if (x.mode != y.mode) return x.mode < y.mode;
    if (x.k != y.k) return x.k < y.k;
    return x.l < y.l;
  });
  return out;
}

// ---- separability and concurrence -------------------------------------------

template <class Scalar>
SeparabilityResult<Scalar> is_separable(const PureState<Scalar>& s, double tol) {
  if (tol < 0 || std::isnan(tol)) throw ValidationError("is_separable: tolerance must be nonnegative");
  const auto& amps = s.amplitudes();
  std::size_t peak = 0;
  double peak_norm = -1;
  for (std::size_t f = 0; f < amps.size(); ++f) {
    const double n = norm2(amps[f]);
    if (n > peak_norm) {
      peak_norm = n;
      peak = f;
    }
  }
  if (is_zero_scalar(amps[peak])) throw ValidationError("is_separable: zero state");

  SeparabilityResult<Scalar> result;
  result.separable = true;
  for (const auto& minor : segre_minors(s.shape())) {
    Scalar value = evaluate_minor(minor, s);
    const double magnitude = std::sqrt(norm2(value));
    if (!result.violating_minor || magnitude > result.max_violation) {
      result.max_violation = magnitude;
      result.violating_minor = minor;
      result.violating_value = value;
    }
    if (!within(value, amps[peak], tol)) result.separable = false;
  }
  if (!result.separable) return result;

  // Rows of the tensor through the peak, rescaled so their Segre image is the
  // input: prod_j row_j[i_j] = a_peak^{m-1} a_i.
  const SystemShape& shape = s.shape();
  const MultiIndex center = shape.multi_index(peak);
  ProductState<Scalar> witness;
  for (std::size_t j = 0; j < shape.parties(); ++j) {
    std::vector<Scalar> row(shape.levels()[j]);
    MultiIndex k = center;
    for (std::size_t i = 0; i < row.size(); ++i) {
      k[j] = i;
      row[i] = s[k];
    }
    witness.locals.push_back(std::move(row));
  }
  Scalar factor = amps[peak];
  Scalar scale_power = Scalar(1);
  for (std::size_t j = 1; j < shape.parties(); ++j) scale_power *= factor;
  const Scalar inv = inverse(scale_power);
  for (auto& x : witness.locals[0]) x *= inv;
  result.witness = std::move(witness);
  return result;
}

double concurrence(const PureState<Amplitude>& s, std::span<const double> weights) {
  double total = 0;
  for (const auto& a : s.amplitudes()) total += std::norm(a);
  if (std::abs(total - 1.0) > 1e-9) throw ValidationError("concurrence: state is not normalized");
  const auto minors = segre_minors(s.shape());
  if (!weights.empty() && weights.size() != minors.size()) {
    throw ValidationError("concurrence: expected " + std::to_string(minors.size()) + " weights, got " +
                          std::to_string(weights.size()));
  }
  double sum = 0;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w < 0) throw ValidationError("concurrence: weights must be nonnegative");
    sum += w * std::norm(evaluate_minor(minors[i], s));
  }
  return 2.0 * std::sqrt(sum);
}

PureState<Amplitude> to_floating(const PureState<ComplexRational>& s) {
  std::vector<Amplitude> amps;
  amps.reserve(s.amplitudes().size());
  for (const auto& a : s.amplitudes()) amps.emplace_back(a.re.get_d(), a.im.get_d());
  return PureState<Amplitude>(s.shape(), std::move(amps));
}

std::string to_string(const MinorSpec& m) {
  const bool wide = std::any_of(m.k.begin(), m.k.end(), [](std::size_t x) { return x >= 10; }) ||
                    std::any_of(m.l.begin(), m.l.end(), [](std::size_t x) { return x >= 10; });
  auto name = [&](const MultiIndex& k) {
    std::ostringstream os;
    os << 'a';
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (wide && i) os << ',';
      os << k[i];
    }
    return os.str();
  };
  return name(m.k) + "*" + name(m.l) + " - " + name(m.k_swapped()) + "*" + name(m.l_swapped());
}

// ---- printed three-qubit list ----------------------------------------------

ThreeQubitGenerators three_qubit_generators() {
  // g1..g12 exactly as printed, as ((k, l), (k', l')) for a_k a_l - a_k' a_l'.
  static const std::array<std::array<std::array<const char*, 2>, 2>, 12> kPrinted = {{
      {{{"000", "110"}, {"010", "100"}}},
      {{{"001", "111"}, {"011", "101"}}},
      {{{"001", "101"}, {"001", "100"}}},
      {{{"010", "111"}, {"011", "110"}}},
      {{{"000", "011"}, {"001", "010"}}},
      {{{"100", "111"}, {"101", "110"}}},
      {{{"000", "111"}, {"001", "110"}}},
      {{{"000", "111"}, {"010", "101"}}},
      {{{"000", "111"}, {"011", "100"}}},
      {{{"001", "110"}, {"010", "101"}}},
      {{{"010", "101"}, {"011", "100"}}},
      {{{"010", "101"}, {"011", "100"}}},
  }};

  const SystemShape shape({2, 2, 2});
  ThreeQubitGenerators out;
  out.canonical = segre_minors(shape);
  std::map<BinomialKey, std::size_t> by_key;
  for (std::size_t i = 0; i < out.canonical.size(); ++i) by_key.emplace(key_of(shape, out.canonical[i]), i);

  std::set<std::size_t> matched;
  for (std::size_t g = 0; g < kPrinted.size(); ++g) {
    PrintedGenerator entry;
    entry.label = "g" + std::to_string(g + 1);
    for (std::size_t side = 0; side < 2; ++side) {
      for (std::size_t f = 0; f < 2; ++f) entry.printed[side][f] = kPrinted[g][side][f];
    }
    const auto flat = [&](const char* bits) { return shape.flat_index(parse_bits(bits)); };
    const BinomialKey key = binomial_key(monomial_key(flat(kPrinted[g][0][0]), flat(kPrinted[g][0][1])),
                                         monomial_key(flat(kPrinted[g][1][0]), flat(kPrinted[g][1][1])));
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      entry.status = PrintedStatus::kNotAMinor;
    } else {
      entry.minor = out.canonical[it->second];
      entry.status = matched.insert(it->second).second ? PrintedStatus::kMatchesMinor : PrintedStatus::kDuplicate;
    }
    out.printed.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < out.canonical.size(); ++i) {
    if (!matched.count(i)) out.unlisted.push_back(out.canonical[i]);
  }
  return out;
}

const char* to_string(PrintedStatus s) {
  switch (s) {
    case PrintedStatus::kMatchesMinor:
      return "matches";
    case PrintedStatus::kNotAMinor:
      return "discrepancy:not_a_minor";
    case PrintedStatus::kDuplicate:
      return "discrepancy:duplicate";
  }
  return "unknown";
}

// ---- instantiations --------------------------------------------------------

template class PureState<Amplitude>;
template class PureState<ComplexRational>;
template PureState<Amplitude> segre_map(const ProductState<Amplitude>&);
template PureState<ComplexRational> segre_map(const ProductState<ComplexRational>&);
template Amplitude evaluate_minor(const MinorSpec&, const PureState<Amplitude>&);
template ComplexRational evaluate_minor(const MinorSpec&, const PureState<ComplexRational>&);
template SeparabilityResult<Amplitude> is_separable(const PureState<Amplitude>&, double);
template SeparabilityResult<ComplexRational> is_separable(const PureState<ComplexRational>&, double);

}  // namespace toricq
