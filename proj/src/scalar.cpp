#include "ut4k/scalar.hpp"

#include <ostream>

namespace ut4k {

Int Int::fromString(const std::string& s)
{
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Int: bad integer literal '" + s + "'");
    return Int(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Int& a)
{
    return os << a.v_.get_str();
}

Rat Rat::fromString(const std::string& s)
{
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad rational literal '" + s + "'");
    if (mpz_sgn(v.get_den().get_mpz_t()) == 0)
        throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rat& a)
{
    return os << a.v_.get_str();
}

} // namespace ut4k
