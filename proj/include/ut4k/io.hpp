// Input grammar for numbers on the command line, and exact JSON
// serialization (all numeric values emitted as decimal/rational strings).
//
// Grammar:
//   poly:<c0>,<c1>,...;interval:<lo>,<hi>   minimal polynomial, ascending
//                                           rational coefficients, and an
//                                           isolating interval
//   quad:(<x>+<y>*sqrt(<r>[/<s>]))/<z>      quadratic surd
//   elt:<c0>,<c1>,...                       coordinates in the ambient field
#pragma once

#include "ut4k/classify.hpp"
#include "ut4k/errors.hpp"
#include "ut4k/groups.hpp"

#include <json.hpp>

#include <string>

namespace ut4k {

struct ThetaSpec {
    enum class Kind { PolyInterval, Surd, Coords };
    Kind kind = Kind::PolyInterval;
    Poly poly;
    Rat lo, hi;
    QuadraticSurd surd;
    RatVector coords;
};

ThetaSpec parseThetaSpec(const std::string& text);
std::string formatThetaSpec(const ThetaSpec& spec);

// Builds Q(theta) from a poly or quad spec (Coords is rejected: it only
// denotes an element of an ambient field).
FieldPtr fieldFromSpec(const ThetaSpec& spec);

// Reads an eta spec relative to theta's field: either elt: coordinates or a
// quadratic surd over the same radicand. For a surd over a different
// radicand returns nothing (the caller reports non-isomorphic).
std::optional<FieldElement> etaFromSpec(const FieldPtr& field, const ThetaSpec& spec);

// "4*theta + 3*theta^2" style rendering of power-basis coordinates.
std::string prettyElement(const RatVector& coords);

nlohmann::json toJson(const Int& v);
nlohmann::json toJson(const Rat& v);
nlohmann::json toJson(const IntVector& v);
nlohmann::json toJson(const RatVector& v);
nlohmann::json toJson(const IntMatrix& m);
nlohmann::json toJson(const RatMatrix& m);
nlohmann::json toJson(const FpAbelianGroup& g);
nlohmann::json toJson(const RationalLattice& l);
nlohmann::json toJson(const RealAlgebraic& a);
nlohmann::json toJson(const ElliottInvariant& inv);
nlohmann::json toJson(const UT4Element& a);

IntMatrix intMatrixFromJson(const nlohmann::json& j);

} // namespace ut4k
