// Exact arbitrary-precision scalars: Int wraps GMP integers, Rat wraps GMP
// rationals. Both return concrete values from every operator (GMP's own
// expression templates never escape), which is what makes them usable as
// Eigen matrix scalars.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace ut4k {

class Int {
public:
    Int() : v_(0) {}
    Int(int v) : v_(v) {}
    Int(long v) : v_(v) {}
    Int(long long v) : v_(static_cast<long>(v)) {}
    explicit Int(const mpz_class& v) : v_(v) {}
    explicit Int(mpz_class&& v) : v_(std::move(v)) {}

    // Accepts an optionally signed decimal string.
    static Int fromString(const std::string& s);

    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

    bool isZero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool isOne() const { return mpz_cmp_si(v_.get_mpz_t(), 1) == 0; }
    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool isEven() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
    bool isPerfectSquare() const
    {
        return sign() >= 0 && mpz_perfect_square_p(v_.get_mpz_t()) != 0;
    }
    bool fitsLong() const { return v_.fits_slong_p(); }
    long toLong() const { return v_.get_si(); }
    double toDouble() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Int operator-() const { return Int(mpz_class(-v_)); }
    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

    friend Int operator+(const Int& a, const Int& b) { return Int(mpz_class(a.v_ + b.v_)); }
    friend Int operator-(const Int& a, const Int& b) { return Int(mpz_class(a.v_ - b.v_)); }
    friend Int operator*(const Int& a, const Int& b) { return Int(mpz_class(a.v_ * b.v_)); }
    // Truncated quotient/remainder, as in C.
    friend Int operator/(const Int& a, const Int& b) { return Int(mpz_class(a.v_ / b.v_)); }
    friend Int operator%(const Int& a, const Int& b) { return Int(mpz_class(a.v_ % b.v_)); }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b)
    {
        int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Int& a);

private:
    mpz_class v_;
};

inline Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

inline Int gcd(const Int& a, const Int& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(g));
}

inline Int lcm(const Int& a, const Int& b)
{
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(l));
}

// g = gcd(a,b) together with x, y such that a*x + b*y = g.
struct ExtGcd {
    Int g, x, y;
};
inline ExtGcd extendedGcd(const Int& a, const Int& b)
{
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
               a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return {Int(std::move(g)), Int(std::move(x)), Int(std::move(y))};
}

// Quotient of an exact division; undefined when b does not divide a.
inline Int divExact(const Int& a, const Int& b)
{
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(q));
}

inline bool divides(const Int& a, const Int& b)
{
    if (a.isZero()) return b.isZero();
    return mpz_divisible_p(b.raw().get_mpz_t(), a.raw().get_mpz_t()) != 0;
}

inline Int divFloor(const Int& a, const Int& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(q));
}

inline Int modFloor(const Int& a, const Int& b)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(r));
}

inline Int pow(const Int& a, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.raw().get_mpz_t(), e);
    return Int(std::move(r));
}

// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& a)
{
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), a.raw().get_mpz_t());
    return Int(std::move(r));
}

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int v) : v_(v) {}
    Rat(long v) : v_(v) {}
    Rat(const Int& v) : v_(v.raw()) {}
    Rat(const Int& num, const Int& den) : v_(num.raw(), den.raw())
    {
        if (den.isZero()) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "p/q" or "-p/q" in decimal.
    static Rat fromString(const std::string& s);

    const mpq_class& raw() const { return v_; }

    Int num() const { return Int(mpz_class(v_.get_num())); }
    Int den() const { return Int(mpz_class(v_.get_den())); }
    bool isZero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool isInteger() const { return mpz_cmp_si(v_.get_den().get_mpz_t(), 1) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    double toDouble() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o)
    {
        if (o.isZero()) throw std::invalid_argument("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b)
    {
        if (b.isZero()) throw std::invalid_argument("Rat: division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& a);

private:
    mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline Int floor(const Rat& a)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.raw().get_num().get_mpz_t(), a.raw().get_den().get_mpz_t());
    return Int(std::move(q));
}

inline Int ceil(const Rat& a)
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.raw().get_num().get_mpz_t(), a.raw().get_den().get_mpz_t());
    return Int(std::move(q));
}

inline Rat inverse(const Rat& a)
{
    if (a.isZero()) throw std::invalid_argument("Rat: inverse of zero");
    return Rat(a.den(), a.num());
}

inline Rat pow(const Rat& a, unsigned long e)
{
    return Rat(pow(a.num(), e), pow(a.den(), e));
}

// In lowest terms p/q is a square of a rational iff p >= 0 and both p and q
// are perfect squares.
inline bool isRationalSquare(const Rat& a)
{
    return a.num().isPerfectSquare() && a.den().isPerfectSquare();
}

// Exact square root of a rational square.
inline Rat ratSqrt(const Rat& a)
{
    if (!isRationalSquare(a)) throw std::invalid_argument("ratSqrt: not a square");
    return Rat(isqrt(a.num()), isqrt(a.den()));
}

} // namespace ut4k

namespace Eigen {

template <>
struct NumTraits<ut4k::Int> : GenericNumTraits<ut4k::Int> {
    typedef ut4k::Int Real;
    typedef ut4k::Int NonInteger;
    typedef ut4k::Int Nested;
    typedef ut4k::Int Literal;
    static inline Real epsilon() { return ut4k::Int(0); }
    static inline Real dummy_precision() { return ut4k::Int(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 10,
        MulCost = 20,
    };
};

template <>
struct NumTraits<ut4k::Rat> : GenericNumTraits<ut4k::Rat> {
    typedef ut4k::Rat Real;
    typedef ut4k::Rat NonInteger;
    typedef ut4k::Rat Nested;
    typedef ut4k::Rat Literal;
    static inline Real epsilon() { return ut4k::Rat(0); }
    static inline Real dummy_precision() { return ut4k::Rat(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 40,
    };
};

} // namespace Eigen
