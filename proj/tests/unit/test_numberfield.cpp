#include "ut4k/numberfield.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ut4k;
using namespace testsupport;

namespace {

Poly P(std::initializer_list<long> ascending)
{
    Poly p(static_cast<Index>(ascending.size()));
    Index i = 0;
    for (long c : ascending) p(i++) = Rat(Int(c));
    return polyTrim(p);
}

FieldPtr cubicField() // x^3 - x - 1 on [1, 2]
{
    return NumberField::create(makeRealAlgebraic(P({-1, -1, 0, 1}), Rat(1), Rat(2)));
}

FieldPtr quarticField() // x^4 + x - 1 on [0, 1]
{
    return NumberField::create(makeRealAlgebraic(P({-1, 1, 0, 0, 1}), Rat(0), Rat(1)));
}

} // namespace

TEST_CASE("field construction validates the polynomial and the interval")
{
    CHECK_NOTHROW((void)makeRealAlgebraic(P({-2, 0, 1}), Rat(1), Rat(2)));
    CHECK_NOTHROW((void)makeRealAlgebraic(P({-1, -1, 0, 1}), Rat(1), Rat(2)));
    CHECK_THROWS_AS((void)makeRealAlgebraic(P({-4, 0, 1}), Rat(1), Rat(3)), std::invalid_argument);
    // sqrt(2): the interval [-2, 2] contains both roots.
    CHECK_THROWS_AS((void)makeRealAlgebraic(P({-2, 0, 1}), Rat(-2), Rat(2)), std::invalid_argument);
    // Empty interval.
    CHECK_THROWS_AS((void)makeRealAlgebraic(P({-2, 0, 1}), Rat(2), Rat(1)), std::invalid_argument);
    // Degree 5 passes with the irreducibility flag off.
    const RealAlgebraic quintic = makeRealAlgebraic(P({-1, -1, 0, 0, 0, 1}), Rat(1), Rat(2));
    CHECK(!quintic.irreducibilityChecked);
}

TEST_CASE("multiplication reduces modulo the minimal polynomial")
{
    const FieldPtr f3 = cubicField();
    const FieldElement theta = f3->theta();
    CHECK((theta * theta) == f3->thetaPower(2));

    // (4 theta + 3 theta^2)^2 = 24 + 33 theta + 25 theta^2 when theta^3 = theta + 1.
    const FieldElement eta =
        f3->element(ratVec({Rat(0), Rat(4), Rat(3)}));
    const FieldElement sq = eta * eta;
    CHECK(sq == f3->element(ratVec({Rat(24), Rat(33), Rat(25)})));

    // theta^2 * theta^2 = 1 - theta when theta^4 = 1 - theta.
    const FieldPtr f4 = quarticField();
    const FieldElement t2 = f4->thetaPower(2);
    CHECK((t2 * t2) == f4->element(ratVec({Rat(1), Rat(-1), Rat(0), Rat(0)})));
}

TEST_CASE("field axioms hold exactly on random elements")
{
    const FieldPtr f = cubicField();
    Rng rng(2718);
    std::uniform_int_distribution<int> dist(-6, 6);
    const auto randomElt = [&]() {
        RatVector c(3);
        for (Index i = 0; i < 3; ++i)
            c(i) = Rat(Int(dist(rng)), Int(static_cast<long>(1 + (rng() % 4))));
        return f->element(c);
    };
    for (int trial = 0; trial < 60; ++trial) {
        const FieldElement a = randomElt(), b = randomElt(), c = randomElt();
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + b) == (b + a));
        if (!a.isZero()) {
            const FieldElement inv = f->one() / a;
            CHECK((a * inv) == f->one());
        }
    }
}

TEST_CASE("minimal polynomials of elements")
{
    const FieldPtr f3 = cubicField();
    CHECK(allEqual(minimalPolynomial(f3->theta()), f3->generator().minpoly));
    CHECK(allEqual(minimalPolynomial(f3->fromRational(Rat(7))), P({-7, 1})));

    // theta^2 in the quartic field: y^4 - 2y^2 - y + 1, irreducible.
    const FieldPtr f4 = quarticField();
    const Poly mp = minimalPolynomial(f4->thetaPower(2));
    CHECK(allEqual(mp, P({1, -1, -2, 0, 1})));
    CHECK(isIrreducibleUpToDeg4(mp));

    // It annihilates the element.
    FieldElement acc = f4->zero();
    const FieldElement a = f4->thetaPower(2);
    for (Index i = 0; i < mp.size(); ++i)
        acc = acc + f4->fromRational(mp(i)) * a.pow(static_cast<unsigned long>(i));
    CHECK(acc.isZero());
}

TEST_CASE("exact signs at the distinguished root")
{
    const FieldPtr f3 = cubicField();
    CHECK(signOf(f3->zero()) == 0);
    // theta - 1 > 0 since theta ~ 1.3247.
    CHECK(signOf(f3->theta() - f3->one()) == 1);
    CHECK(signOf(f3->one() - f3->theta()) == -1);

    // 9 theta^2 - 6 theta - 1 = 0 for theta = (1+sqrt(2))/3.
    const auto [f2, theta2] = surdToField({Int(1), Int(1), Int(3), Int(2), Int(1)});
    const FieldElement zero =
        f2->fromRational(Rat(-1)) - f2->fromRational(Rat(6)) * theta2 +
        f2->fromRational(Rat(9)) * theta2 * theta2;
    CHECK(zero.isZero());
    CHECK(signOf(zero) == 0);

    Rng rng(1234);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        RatVector c(3);
        for (Index i = 0; i < 3; ++i) c(i) = Rat(Int(dist(rng)));
        const FieldElement a = f3->element(c);
        CHECK(signOf(a) == -signOf(-a));
    }
}

TEST_CASE("integer translate recognition")
{
    const FieldPtr f3 = cubicField();
    const FieldElement theta = f3->theta();
    const auto plus5 = integerTranslateClass(theta + f3->fromRational(Rat(5)));
    REQUIRE(plus5.has_value());
    CHECK(plus5->first == 1);
    CHECK(plus5->second == Int(5));

    const auto minus = integerTranslateClass(f3->fromRational(Rat(1)) - theta);
    REQUIRE(minus.has_value());
    CHECK(minus->first == -1);
    CHECK(minus->second == Int(1));

    CHECK(!integerTranslateClass(theta * theta).has_value());

    for (int m = -10; m <= 10; ++m) {
        const auto t = integerTranslateClass(theta + f3->fromRational(Rat(m)));
        REQUIRE(t.has_value());
        CHECK(t->first == 1);
        CHECK(t->second == Int(m));
    }

    // (1+2 sqrt(2))/3 is not an integer translate of (1+sqrt(2))/3.
    const auto [f2, th] = surdToField({Int(1), Int(1), Int(3), Int(2), Int(1)});
    const auto eta = surdInField(f2, {Int(1), Int(2), Int(3), Int(2), Int(1)});
    REQUIRE(eta.has_value());
    CHECK(!integerTranslateClass(*eta).has_value());
}

TEST_CASE("surd round trips")
{
    // (1 + sqrt(2))/3: minpoly x^2 - (2/3)x - 1/9, root ~ 0.8047.
    const auto [f, theta] = surdToField({Int(1), Int(1), Int(3), Int(2), Int(1)});
    CHECK(allEqual(f->generator().minpoly,
                   polyFromCoeffs({Rat(Int(-1), Int(9)), Rat(Int(-2), Int(3)), Rat(1)})));
    const QuadraticSurd back = surdFromField(f->generator());
    CHECK(back.x == Int(1));
    CHECK(back.y == Int(1));
    CHECK(back.z == Int(3));
    CHECK(back.kNum == Int(2));

    // (0 + sqrt(2))/1 gives x^2 - 2.
    const auto [fs, root2] = surdToField({Int(0), Int(1), Int(1), Int(2), Int(1)});
    CHECK(allEqual(fs->generator().minpoly, P({-2, 0, 1})));

    // (2 + 2 sqrt(2))/6 canonicalizes to (1 + sqrt(2))/3.
    const QuadraticSurd canon = canonicalSurd({Int(2), Int(2), Int(6), Int(2), Int(1)});
    CHECK(canon.x == Int(1));
    CHECK(canon.y == Int(1));
    CHECK(canon.z == Int(3));
    CHECK(canon.kNum == Int(2));

    // Radicand that is a rational square is rejected.
    CHECK_THROWS_AS((void)canonicalSurd({Int(1), Int(1), Int(2), Int(4), Int(1)}),
                    std::invalid_argument);
    // sqrt(8) = 2 sqrt(2).
    const QuadraticSurd eight = canonicalSurd({Int(1), Int(1), Int(3), Int(8), Int(1)});
    CHECK(eight.y == Int(2));
    CHECK(eight.kNum == Int(2));
    // Rational radicand 2/9: sqrt(2/9) = sqrt(2)/3 = (0 + 1*sqrt(2))/3.
    const QuadraticSurd frac = canonicalSurd({Int(0), Int(1), Int(1), Int(2), Int(9)});
    CHECK(frac.kNum == Int(2));
    CHECK(frac.y == Int(1));
    CHECK(frac.z == Int(3));

    // The negative branch -sqrt(2) is distinguished from +sqrt(2).
    const auto [fn, negRoot] = surdToField({Int(0), Int(-1), Int(1), Int(2), Int(1)});
    CHECK(signOf(negRoot) == -1);
    const QuadraticSurd negBack = surdFromField(fn->generator());
    CHECK(negBack.y == Int(-1));
}

TEST_CASE("the polynomial and surd routes name the same field")
{
    // (1+sqrt(2))/3 via its surd and via minpoly + interval.
    const auto [fq, thetaQ] = surdToField({Int(1), Int(1), Int(3), Int(2), Int(1)});
    const Poly mp = polyFromCoeffs({Rat(Int(-1), Int(9)), Rat(Int(-2), Int(3)), Rat(1)});
    const FieldPtr fp = NumberField::create(makeRealAlgebraic(mp, Rat(0), Rat(1)));
    CHECK(fp->sameField(*fq));
    // Elements from the two objects combine.
    const FieldElement sum = fp->theta() + thetaQ;
    CHECK(sum.coords()(1) == Rat(2));

    // The conjugate root (1-sqrt(2))/3 (negative) is a different field value.
    const FieldPtr fneg = NumberField::create(makeRealAlgebraic(mp, Rat(-1), Rat(0)));
    CHECK(!fneg->sameField(*fq));
    CHECK_THROWS_AS((void)(fneg->theta() + thetaQ), std::invalid_argument);
}

TEST_CASE("decimal approximation is labeled and stable")
{
    const RealAlgebraic t = makeRealAlgebraic(P({-1, -1, 0, 1}), Rat(1), Rat(2));
    CHECK(approximateDecimal(t, 6) == "1.324718");
    const RealAlgebraic s = makeRealAlgebraic(P({-2, 0, 1}), Rat(-2), Rat(-1));
    CHECK(approximateDecimal(s, 6) == "-1.414214");
}
