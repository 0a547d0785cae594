#pragma once

// JSON encodings of the library types. Object keys are emitted in sorted order
// (nlohmann::json default), so dump() output is canonical.
//
// Integers within the 53-bit safe range are JSON numbers, larger ones decimal
// strings; both are accepted on input. Exact rationals are "p/q" strings.

#include <nlohmann/json.hpp>

#include <string>

#include "toricq/arith.hpp"
#include "toricq/lattice_geometry.hpp"
#include "toricq/monoid.hpp"
#include "toricq/qubit_toric.hpp"
#include "toricq/segre.hpp"
#include "toricq/toric_ideal.hpp"

namespace toricq::json_io {

using nlohmann::json;

/// nlohmann::json::parse with parse errors mapped to ValidationError.
json parse(const std::string& text);

json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const ComplexRational& z);
json to_json(const Amplitude& z);

Integer integer_from_json(const json& j);
/// Integer, "p/q" string, or a finite JSON float (converted exactly).
Rational rational_from_json(const json& j);
IntVector int_vector_from_json(const json& j);
/// Rows must share one length; `expected_length` (if nonzero) is enforced.
IntMatrix int_matrix_from_json(const json& j, std::size_t expected_length = 0);

/// {"dim":n,"generators":[[...]]}
json to_json(const LatticeCone& c);
LatticeCone cone_from_json(const json& j);

/// {"dim":n,"vertices":[[...]]}
json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

/// {"dim":n,"cones":[cone...]}
json to_json(const Fan& f);
Fan fan_from_json(const json& j);

/// {"dim":d,"indices":[...]}
json to_json(const Face& f);

/// {"cone":cone,"generators":[[...]]}
json to_json(const MonoidGenerators& g);
MonoidGenerators monoid_from_json(const json& j);

/// {"nu":[...],"mu":[...]}
json to_json(const Binomial& b);
Binomial binomial_from_json(const json& j);

/// A monomial map is its exponent matrix [[...]] (one row per variable).
json to_json(const MonomialMap& m);
MonomialMap map_from_json(const json& j);

/// {"map":[[...]],"degreeBound":d,"grading":"homogeneous"|"affine","generators":[binomial...]}
json to_json(const BinomialIdeal& ideal);
BinomialIdeal ideal_from_json(const json& j);

/// {"shape":[N...],"amplitudes":[{"index":[k...],"re":..,"im":..}]}; zero
/// amplitudes are omitted on output and default to zero on input.
json to_json(const PureState<ComplexRational>& s);
json to_json(const PureState<Amplitude>& s);
PureState<ComplexRational> state_from_json(const json& j);

/// {"separable":b,"maxViolation":x,"violatingMinor":"..."|null,"witness":[[z...]]|null}
json to_json(const SeparabilityResult<Amplitude>& r);

json to_json(const MinorSpec& m);

/// {"m":m,"exponents":[[bits]]}
json to_json(const ParameterizationMap& p);
ParameterizationMap parameterization_from_json(const json& j);

/// {"fan":fan,"charts":[{"cone":cone,"coordinates":[[...]]}],"transitions":[{"from","to","exponents"}]}
json to_json(const ChartAtlas& a);

}  // namespace toricq::json_io
