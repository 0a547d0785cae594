#include "toricq/json_io.hpp"

#include <cmath>
#include <limits>

#include "toricq/error.hpp"

namespace toricq::json_io {

namespace {

const Integer kSafeMax("9007199254740991");

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ValidationError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ValidationError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

// ---- scalars ---------------------------------------------------------------

json to_json(const Integer& v) {
  if (abs(v) <= kSafeMax) return json(v.get_si());
  return json(v.get_str());
}

json to_json(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return json(c.get_str());
}

json to_json(const ComplexRational& z) { return json{{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

json to_json(const Amplitude& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                  : Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("not an integer: " + j.dump());
    return v;
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) throw ValidationError("non-finite number");
    return Rational(d);
  }
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
      throw ValidationError("not a rational \"p/q\": " + j.dump());
    }
    q.canonicalize();
    return q;
  }
  throw ValidationError("expected a number or \"p/q\" string, got " + j.dump());
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers, got " + j.dump());
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix int_matrix_from_json(const json& j, std::size_t expected_length) {
  if (!j.is_array()) throw ValidationError("expected an array of integer rows");
  IntMatrix m;
  for (const auto& row : j) {
    m.push_back(int_vector_from_json(row));
    const std::size_t want = expected_length ? expected_length : m.front().size();
    if (m.back().size() != want) {
      throw ValidationError("row of length " + std::to_string(m.back().size()) + ", expected " +
                            std::to_string(want));
    }
  }
  return m;
}

// ---- geometry --------------------------------------------------------------

json to_json(const LatticeCone& c) { return json{{"dim", c.dim()}, {"generators", to_json(c.generators())}}; }

LatticeCone cone_from_json(const json& j) {
  const std::size_t dim = size_from_json(field(j, "dim"), "dim");
  return LatticeCone(dim, int_matrix_from_json(field(j, "generators"), dim));
}

json to_json(const LatticePolytope& p) { return json{{"dim", p.dim()}, {"vertices", to_json(p.vertices())}}; }

LatticePolytope polytope_from_json(const json& j) {
  const std::size_t dim = size_from_json(field(j, "dim"), "dim");
  return LatticePolytope(dim, int_matrix_from_json(field(j, "vertices"), dim));
}

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.cones()) cones.push_back(to_json(c));
  return json{{"dim", f.dim()}, {"cones", std::move(cones)}};
}

Fan fan_from_json(const json& j) {
  const std::size_t dim = size_from_json(field(j, "dim"), "dim");
  const json& arr = field(j, "cones");
  if (!arr.is_array()) throw ValidationError("\"cones\" must be an array");
  std::vector<LatticeCone> cones;
  for (const auto& c : arr) cones.push_back(cone_from_json(c));
  return Fan(dim, std::move(cones));
}

json to_json(const Face& f) { return json{{"dim", f.dim}, {"indices", f.indices}}; }

json to_json(const MonoidGenerators& g) {
  return json{{"cone", to_json(g.ambient_cone)}, {"generators", to_json(g.generators)}};
}

MonoidGenerators monoid_from_json(const json& j) {
  MonoidGenerators g;
  g.ambient_cone = cone_from_json(field(j, "cone"));
  g.generators = int_matrix_from_json(field(j, "generators"), g.ambient_cone.dim());
  return g;
}

// ---- ideals ----------------------------------------------------------------

json to_json(const Binomial& b) { return json{{"nu", to_json(b.nu)}, {"mu", to_json(b.mu)}}; }

Binomial binomial_from_json(const json& j) {
  return Binomial::normalized(int_vector_from_json(field(j, "nu")), int_vector_from_json(field(j, "mu")));
}

json to_json(const MonomialMap& m) { return to_json(m.exponents()); }

MonomialMap map_from_json(const json& j) {
  IntMatrix rows = int_matrix_from_json(j);
  if (rows.empty()) throw ValidationError("monomial map needs at least one exponent");
  const std::size_t n = rows.front().size();
  return MonomialMap(n, std::move(rows));
}

json to_json(const BinomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& b : ideal.generators) gens.push_back(to_json(b));
  return json{{"map", to_json(ideal.map)},
              {"degreeBound", ideal.degree_bound},
              {"grading", ideal.grading == Grading::kAffine ? "affine" : "homogeneous"},
              {"generators", std::move(gens)}};
}

BinomialIdeal ideal_from_json(const json& j) {
  BinomialIdeal ideal;
  ideal.map = map_from_json(field(j, "map"));
  ideal.degree_bound = size_from_json(field(j, "degreeBound"), "degreeBound");
  if (j.contains("grading")) {
    const auto g = j.at("grading");
    if (g == "affine") {
      ideal.grading = Grading::kAffine;
    } else if (g != "homogeneous") {
      throw ValidationError("grading must be \"homogeneous\" or \"affine\"");
    }
  }
  const json& arr = field(j, "generators");
  if (!arr.is_array()) throw ValidationError("\"generators\" must be an array");
  for (const auto& b : arr) {
    ideal.generators.push_back(binomial_from_json(b));
    if (ideal.generators.back().nu.size() != ideal.map.variable_count()) {
      throw ValidationError("binomial length does not match the map");
    }
  }
  return ideal;
}

// ---- states ----------------------------------------------------------------

namespace {

template <class Scalar>
json state_json(const PureState<Scalar>& s, auto&& is_zero) {
  json amps = json::array();
  for (std::size_t f = 0; f < s.shape().size(); ++f) {
    const auto& a = s.amplitudes()[f];
    if (is_zero(a)) continue;
    json entry = to_json(a);
    entry["index"] = s.shape().multi_index(f);
    amps.push_back(std::move(entry));
  }
  return json{{"shape", s.shape().levels()}, {"amplitudes", std::move(amps)}};
}

}  // namespace

json to_json(const PureState<ComplexRational>& s) {
  return state_json(s, [](const ComplexRational& z) { return z.is_zero(); });
}

json to_json(const PureState<Amplitude>& s) {
  return state_json(s, [](const Amplitude& z) { return z == Amplitude(0); });
}

PureState<ComplexRational> state_from_json(const json& j) {
  const json& shape_json = field(j, "shape");
  if (!shape_json.is_array()) throw ValidationError("\"shape\" must be an array");
  std::vector<std::size_t> levels;
  for (const auto& n : shape_json) levels.push_back(size_from_json(n, "shape entry"));
  const SystemShape shape(levels);
  std::vector<ComplexRational> amps(shape.size());
  std::vector<bool> seen(shape.size(), false);
  const json& arr = field(j, "amplitudes");
  if (!arr.is_array()) throw ValidationError("\"amplitudes\" must be an array");
  for (const auto& entry : arr) {
    const json& idx_json = field(entry, "index");
    if (!idx_json.is_array()) throw ValidationError("\"index\" must be an array");
    MultiIndex idx;
    for (const auto& k : idx_json) idx.push_back(size_from_json(k, "index entry"));
    const std::size_t f = shape.flat_index(idx);
    if (seen[f]) throw ValidationError("amplitude index listed twice");
    seen[f] = true;
    const Rational re = entry.contains("re") ? rational_from_json(entry.at("re")) : Rational(0);
    const Rational im = entry.contains("im") ? rational_from_json(entry.at("im")) : Rational(0);
    amps[f] = ComplexRational(re, im);
  }
  return PureState<ComplexRational>(shape, std::move(amps));
}

json to_json(const MinorSpec& m) { return json(to_string(m)); }

json to_json(const SeparabilityResult<Amplitude>& r) {
  json out{{"separable", r.separable}, {"maxViolation", r.max_violation}};
  out["violatingMinor"] = r.violating_minor ? to_json(*r.violating_minor) : json(nullptr);
  if (r.witness) {
    json locals = json::array();
    for (const auto& v : r.witness->locals) {
      json vec = json::array();
      for (const auto& z : v) vec.push_back(to_json(z));
      locals.push_back(std::move(vec));
    }
    out["witness"] = std::move(locals);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

// ---- qubit constructions ---------------------------------------------------

json to_json(const ParameterizationMap& p) { return json{{"m", p.parties}, {"exponents", to_json(p.exponents)}}; }

ParameterizationMap parameterization_from_json(const json& j) {
  ParameterizationMap p;
  p.parties = size_from_json(field(j, "m"), "m");
  p.exponents = int_matrix_from_json(field(j, "exponents"), p.parties);
  return p;
}

json to_json(const ChartAtlas& a) {
  json charts = json::array();
  for (const auto& c : a.charts) {
    charts.push_back(json{{"cone", to_json(c.cone)}, {"coordinates", to_json(c.coordinates)}});
  }
  json transitions = json::array();
  for (const auto& t : a.transitions) {
    transitions.push_back(json{{"from", t.from}, {"to", t.to}, {"exponents", to_json(t.exponents)}});
  }
  return json{{"fan", to_json(a.fan)}, {"charts", std::move(charts)}, {"transitions", std::move(transitions)}};
}

}  // namespace toricq::json_io
