#include "ut4k/io.hpp"

#include <cctype>
#include <sstream>

namespace ut4k {

namespace {

std::string stripSpace(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

Rat parseRat(const std::string& s)
{
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        return Rat::fromString(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Int parseInt(const std::string& s)
{
    const Rat r = parseRat(s);
    if (!r.isInteger()) throw ParseError("expected an integer, got '" + s + "'");
    return r.num();
}

std::vector<std::string> splitOn(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

RatVector parseRatList(const std::string& s)
{
    const auto parts = splitOn(s, ',');
    RatVector v(static_cast<Index>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i) v(static_cast<Index>(i)) = parseRat(parts[i]);
    return v;
}

// (<x>+<y>*sqrt(<r>[/<s>]))/<z>, with either sign before the surd term.
QuadraticSurd parseSurd(const std::string& body)
{
    const auto fail = [&]() -> QuadraticSurd {
        throw ParseError("bad quadratic surd '" + body + "', expected (x+y*sqrt(k))/z");
    };
    if (body.empty() || body.front() != '(') return fail();
    const size_t close = body.rfind(')');
    if (close == std::string::npos) return fail();
    const std::string inner = body.substr(1, close - 1);
    std::string tail = body.substr(close + 1);
    if (tail.size() < 2 || tail.front() != '/') return fail();
    const Int z = parseInt(tail.substr(1));

    // inner = x (+|-) y*sqrt(r[/s]); find the sign that precedes y*sqrt.
    const size_t sq = inner.find("*sqrt(");
    if (sq == std::string::npos || inner.back() != ')') return fail();
    size_t sep = std::string::npos;
    for (size_t i = sq; i-- > 1;) {
        if (inner[i] == '+' || inner[i] == '-') {
            // Skip signs that belong to y itself ("+-2*sqrt(2)").
            if (inner[i - 1] == '+' || inner[i - 1] == '-') continue;
            sep = i;
            break;
        }
    }
    if (sep == std::string::npos) return fail();
    const Int x = parseInt(inner.substr(0, sep));
    Int y = parseInt(inner.substr(sep + 1, sq - sep - 1));
    if (inner[sep] == '-') y = -y;
    const std::string rad = inner.substr(sq + 6, inner.size() - sq - 7);
    const auto parts = splitOn(rad, '/');
    if (parts.size() > 2) return fail();
    const Int r = parseInt(parts[0]);
    const Int s = parts.size() == 2 ? parseInt(parts[1]) : Int(1);
    return {x, y, z, r, s};
}

} // namespace

ThetaSpec parseThetaSpec(const std::string& text0)
{
    const std::string text = stripSpace(text0);
    ThetaSpec spec;
    if (text.rfind("poly:", 0) == 0) {
        const size_t semi = text.find(";interval:");
        if (semi == std::string::npos)
            throw ParseError("poly spec needs ';interval:lo,hi' after the coefficients");
        spec.kind = ThetaSpec::Kind::PolyInterval;
        spec.poly = polyTrim(parseRatList(text.substr(5, semi - 5)));
        const auto iv = splitOn(text.substr(semi + 10), ',');
        if (iv.size() != 2) throw ParseError("interval needs exactly two endpoints");
        spec.lo = parseRat(iv[0]);
        spec.hi = parseRat(iv[1]);
        return spec;
    }
    if (text.rfind("quad:", 0) == 0) {
        spec.kind = ThetaSpec::Kind::Surd;
        spec.surd = parseSurd(text.substr(5));
        return spec;
    }
    if (text.rfind("elt:", 0) == 0) {
        spec.kind = ThetaSpec::Kind::Coords;
        spec.coords = parseRatList(text.substr(4));
        return spec;
    }
    throw ParseError("unknown number spec '" + text0 + "' (expected poly:, quad: or elt:)");
}

std::string formatThetaSpec(const ThetaSpec& spec)
{
    std::ostringstream os;
    switch (spec.kind) {
    case ThetaSpec::Kind::PolyInterval: {
        os << "poly:";
        for (Index i = 0; i < spec.poly.size(); ++i) {
            if (i) os << ",";
            os << spec.poly(i);
        }
        os << ";interval:" << spec.lo << "," << spec.hi;
        break;
    }
    case ThetaSpec::Kind::Surd:
        os << "quad:(" << spec.surd.x << "+" << spec.surd.y << "*sqrt(" << spec.surd.kNum;
        if (!spec.surd.kDen.isOne()) os << "/" << spec.surd.kDen;
        os << "))/" << spec.surd.z;
        break;
    case ThetaSpec::Kind::Coords:
        os << "elt:";
        for (Index i = 0; i < spec.coords.size(); ++i) {
            if (i) os << ",";
            os << spec.coords(i);
        }
        break;
    }
    return os.str();
}

FieldPtr fieldFromSpec(const ThetaSpec& spec)
{
    switch (spec.kind) {
    case ThetaSpec::Kind::PolyInterval: {
        try {
            return NumberField::create(makeRealAlgebraic(spec.poly, spec.lo, spec.hi));
        } catch (const std::invalid_argument& e) {
            throw DomainError(e.what());
        }
    }
    case ThetaSpec::Kind::Surd: {
        try {
            return surdToField(spec.surd).first;
        } catch (const std::invalid_argument& e) {
            throw DomainError(e.what());
        }
    }
    case ThetaSpec::Kind::Coords:
        throw DomainError("theta must be given as poly:...;interval:... or quad:...");
    }
    throw std::logic_error("fieldFromSpec: unreachable");
}

std::optional<FieldElement> etaFromSpec(const FieldPtr& field, const ThetaSpec& spec)
{
    switch (spec.kind) {
    case ThetaSpec::Kind::Coords: {
        if (spec.coords.size() != field->degree())
            throw DomainError("elt: coordinate count must equal the field degree");
        return field->element(spec.coords);
    }
    case ThetaSpec::Kind::Surd: {
        try {
            return surdInField(field, spec.surd);
        } catch (const std::invalid_argument& e) {
            throw DomainError(e.what());
        }
    }
    case ThetaSpec::Kind::PolyInterval:
        throw DomainError(
            "eta must be given inside Q(theta) (elt:...) or as a quadratic surd (quad:...); "
            "recognizing an arbitrary poly/interval number inside Q(theta) is unsupported");
    }
    throw std::logic_error("etaFromSpec: unreachable");
}

std::string prettyElement(const RatVector& coords)
{
    std::ostringstream os;
    bool first = true;
    for (Index i = 0; i < coords.size(); ++i) {
        if (coords(i).isZero()) continue;
        Rat c = coords(i);
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        const bool unitCoeff = c == Rat(1) && i > 0;
        if (!unitCoeff) os << c;
        if (i > 0) {
            if (!unitCoeff) os << "*";
            os << "theta";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

nlohmann::json toJson(const Int& v) { return v.str(); }
nlohmann::json toJson(const Rat& v) { return v.str(); }

nlohmann::json toJson(const IntVector& v)
{
    nlohmann::json j = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) j.push_back(toJson(v(i)));
    return j;
}

nlohmann::json toJson(const RatVector& v)
{
    nlohmann::json j = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) j.push_back(toJson(v(i)));
    return j;
}

nlohmann::json toJson(const IntMatrix& m)
{
    nlohmann::json j = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(toJson(m(i, k)));
        j.push_back(row);
    }
    return j;
}

nlohmann::json toJson(const RatMatrix& m)
{
    nlohmann::json j = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(toJson(m(i, k)));
        j.push_back(row);
    }
    return j;
}

nlohmann::json toJson(const FpAbelianGroup& g)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& f : g.invariantFactors) torsion.push_back(toJson(f));
    return {{"rank", g.freeRank}, {"torsion", torsion}, {"pretty", g.describe()}};
}

nlohmann::json toJson(const RationalLattice& l)
{
    return {{"ambient_dim", l.ambientDim},
            {"denominator", toJson(l.den)},
            {"hnf_basis", toJson(l.basis)}};
}

nlohmann::json toJson(const RealAlgebraic& a)
{
    return {{"minpoly", toJson(RatVector(a.minpoly))},
            {"interval", nlohmann::json::array({toJson(a.lo), toJson(a.hi)})},
            {"irreducibility_checked", a.irreducibilityChecked}};
}

nlohmann::json toJson(const ElliottInvariant& inv)
{
    nlohmann::json cone = nlohmann::json::array();
    for (const FieldElement& e : inv.coneNormal) cone.push_back(toJson(e.coords()));
    return {{"k0", toJson(inv.k0)},
            {"k1", toJson(inv.k1)},
            {"cone_normal", cone},
            {"order_unit", toJson(inv.orderUnit)},
            {"trace_range", toJson(inv.traceRange)},
            {"theta", toJson(inv.theta)}};
}

nlohmann::json toJson(const UT4Element& a)
{
    return nlohmann::json::array({toJson(a.a12), toJson(a.a13), toJson(a.a14),
                                  toJson(a.a23), toJson(a.a24), toJson(a.a34)});
}

IntMatrix intMatrixFromJson(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array of rows");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j.at(0).size());
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError("matrix JSON rows must all have the same length");
        for (Index k = 0; k < cols; ++k) {
            const auto& cell = row.at(static_cast<size_t>(k));
            if (cell.is_number_integer()) {
                m(i, k) = Int(static_cast<long>(cell.get<long long>()));
            } else if (cell.is_string()) {
                try {
                    m(i, k) = Int::fromString(cell.get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
            } else {
                throw ParseError("matrix entries must be integers or decimal strings");
            }
        }
    }
    return m;
}

} // namespace ut4k
