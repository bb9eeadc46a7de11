#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sesh/value.hpp"
#include "gen.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

using namespace sesh;

namespace {

// Independent oracles. These deliberately avoid the library's own code
// paths: floating evaluation at 100 digits, factorials, and brute loops.

using bigfloat = boost::multiprecision::cpp_bin_float_100;

bigfloat to_bigfloat(const Rational& r) {
    return bigfloat(r.num().str()) / bigfloat(r.den().str());
}

bigfloat to_bigfloat(const QuadExt& x) {
    return to_bigfloat(x.rational_part()) +
           to_bigfloat(x.surd_coefficient()) * sqrt(bigfloat(x.radicand().str()));
}

int oracle_sign(const QuadExt& x) {
    bigfloat v = to_bigfloat(x);
    bigfloat eps("1e-60");
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Int binomial_oracle(unsigned n, unsigned k) {
    if (k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Int isqrt_oracle(long long n) {
    long long s = 0;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

} // namespace

TEST_CASE("rational canonical form and field axioms") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK(gcd(a.num(), a.den()) == 1);
        CHECK(a.den() > 0);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("rational floor, ceil, pow, parse") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(least_integer_greater(Rational(2)) == 3);
    CHECK(least_integer_greater(Rational(5, 2)) == 3);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(parse_rational("13.7") == Rational(137, 10));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational(" 13/6 ") == Rational(13, 6));
    CHECK(parse_rational("-7") == Rational(-7));
    // Leading zeros are decimal, never an octal prefix.
    CHECK(parse_rational("0780") == Rational(780));
    CHECK(parse_rational("017") == Rational(17));
    CHECK(parse_rational("13.017") == Rational(13017, 1000));
    CHECK(parse_rational("0.08") == Rational(8, 100));
    CHECK(parse_rational("007/010") == Rational(7, 10));
    CHECK(parse_rational("00") == Rational(0));
    CHECK(parse_rational("0.000") == Rational(0));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1/00"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational(""));

    gen::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational();
        CHECK(parse_rational(a.str()) == a);
    }
}

TEST_CASE("quad_sign on pinned values") {
    CHECK(quad_sign(QuadExt(Rational(13), Rational(2, 7), 6)) == 1);
    CHECK(quad_sign(QuadExt(Rational(0), Rational(0), 5)) == 0);
    QuadExt x(Rational(-4), Rational(1), 15);
    CHECK(oracle_sign(x) == -1);
    CHECK(quad_sign(x) == -1);
    CHECK(quad_sign(QuadExt(Rational(-4), Rational(1), 17)) == 1);
}

TEST_CASE("quad_sign agrees with 100-digit evaluation") {
    gen::Rng rng(13);
    for (int i = 0; i < 10000; ++i) {
        QuadExt x = rng.surd();
        int want = oracle_sign(x);
        if (want == 0) {
            CHECK(x.is_zero());
        } else {
            CHECK(quad_sign(x) == want);
        }
    }
}

TEST_CASE("quadext normalization and arithmetic") {
    CHECK(QuadExt(Rational(0), Rational(1), 8) == QuadExt(Rational(0), Rational(2), 2));
    CHECK(QuadExt(Rational(1), Rational(3), 1) == QuadExt(Rational(4)));
    CHECK(QuadExt(Rational(5), Rational(0), 7).radicand() == 0);
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), -2), std::domain_error);

    QuadExt r2(Rational(0), Rational(1), 2);
    CHECK((r2 * r2) == QuadExt(Rational(2)));
    QuadExt x(Rational(3), Rational(1), 5);
    CHECK(x * x.conjugate() == QuadExt(Rational(4)));
    CHECK((x / x) == QuadExt(Rational(1)));
    CHECK((QuadExt(Rational(1)) / x) * x == QuadExt(Rational(1)));
    QuadExt r3(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(r2 + r3, MixedRadicand);
    CHECK_THROWS_AS(r2 * r3, MixedRadicand);

    gen::Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        Int d(rng.range(2, 200));
        QuadExt a(rng.rational(50), rng.rational(50), d);
        QuadExt b(rng.rational(50), rng.rational(50), d);
        bigfloat fa = to_bigfloat(a), fb = to_bigfloat(b);
        CHECK(abs(to_bigfloat(a + b) - (fa + fb)) < bigfloat("1e-50"));
        CHECK(abs(to_bigfloat(a * b) - (fa * fb)) < bigfloat("1e-40"));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("quad_compare_mixed pinned orderings") {
    QuadExt one_r2(Rational(1), Rational(1), 2), one_r3(Rational(1), Rational(1), 3);
    CHECK(quad_compare_mixed(one_r2, one_r3) < 0);
    CHECK(quad_compare_mixed(QuadExt(Rational(0), Rational(1), 8),
                             QuadExt(Rational(0), Rational(2), 2)) == 0);
    QuadExt a(Rational(3), Rational(1), 5), b(Rational(2), Rational(1), 10);
    CHECK(to_bigfloat(a) > to_bigfloat(b));
    CHECK(quad_compare_mixed(a, b) > 0);
}

TEST_CASE("quad_compare_mixed is a total order") {
    gen::Rng rng(15);
    for (int i = 0; i < 400; ++i) {
        QuadExt x = rng.surd(40, 60), y = rng.surd(40, 60), z = rng.surd(40, 60);
        int xy = quad_compare_mixed(x, y);
        CHECK(xy == -quad_compare_mixed(y, x));
        if (xy <= 0 && quad_compare_mixed(y, z) <= 0) CHECK(quad_compare_mixed(x, z) <= 0);
        bigfloat diff = to_bigfloat(x) - to_bigfloat(y);
        if (abs(diff) > bigfloat("1e-40")) CHECK(xy == (diff > 0 ? 1 : -1));
    }
}

TEST_CASE("nth_root exactness and enclosures") {
    ExactOrInterval cube = nth_root(Rational(8, 27), 3, default_precision());
    REQUIRE(cube.is_rational());
    CHECK(cube.rational_value() == Rational(2, 3));

    ExactOrInterval root2 = nth_root(Rational(2), 2, default_precision());
    REQUIRE(root2.exact());
    CHECK(root2.surd() == QuadExt(Rational(0), Rational(1), 2));

    ExactOrInterval c = nth_root(Rational(4), 3, Rational(1, 1000000000));
    REQUIRE(!c.exact());
    CHECK(c.interval().width() <= Rational(1, 1000000000));
    // Newton oracle for 4^(1/3).
    bigfloat newton = 2;
    for (int i = 0; i < 60; ++i) newton = (2 * newton + 4 / (newton * newton)) / 3;
    bigfloat mid = to_bigfloat(c.interval().mid());
    CHECK(abs(mid - newton) < bigfloat("1e-9"));

    CHECK_THROWS_AS(nth_root(Rational(-1), 2, default_precision()), std::domain_error);

    gen::Rng rng(16);
    for (int i = 0; i < 300; ++i) {
        Rational x = rng.positive_rational(40, 40);
        unsigned n = static_cast<unsigned>(rng.range(1, 5));
        ExactOrInterval r = nth_root(x.pow(n), n, default_precision());
        REQUIRE(r.is_rational());
        CHECK(r.rational_value() == x);
    }
}

TEST_CASE("integer sqrt, roots, binomial") {
    CHECK(isqrt_floor(Int(9)) == 3);
    CHECK(isqrt_floor(Int(7)) == 2);
    CHECK(isqrt_floor(Int(1000001)) == isqrt_oracle(1000001));
    CHECK(isqrt_floor(Int(0)) == 0);
    CHECK(iroot_floor(Int(65), 3) == 4);
    CHECK(iroot_floor(Int(64), 3) == 4);
    CHECK(iroot_floor(Int(63), 3) == 3);

    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(30, 15) == binomial_oracle(30, 15));
    CHECK(binomial(30, 15) == Int("155117520"));
    CHECK(binomial(3, 5) == 0);
    gen::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        unsigned n = static_cast<unsigned>(rng.range(0, 40));
        unsigned k = static_cast<unsigned>(rng.range(0, 44));
        CHECK(binomial(n, k) == binomial_oracle(n, k));
        long long m = rng.range(0, 2000000);
        CHECK(isqrt_floor(Int(m)) * isqrt_floor(Int(m)) <= m);
        CHECK((isqrt_floor(Int(m)) + 1) * (isqrt_floor(Int(m)) + 1) > m);
    }
}

TEST_CASE("squarefree decomposition") {
    auto [s8, f8] = squarefree_decompose(8);
    CHECK(s8 == 2);
    CHECK(f8 == 2);
    auto [s1911, f1911] = squarefree_decompose(1911);
    CHECK(s1911 == 7);
    CHECK(f1911 == 39);
    auto [s1, f1] = squarefree_decompose(1);
    CHECK(s1 == 1);
    CHECK(f1 == 1);
    gen::Rng rng(18);
    for (int i = 0; i < 300; ++i) {
        Int d(rng.range(1, 2000000));
        auto [s, f] = squarefree_decompose(d);
        CHECK(s * s * f == d);
        auto [s2, f2] = squarefree_decompose(f);
        CHECK(s2 == 1);
        CHECK(f2 == f);
    }
}

TEST_CASE("intervals enclose and compose") {
    RationalInterval r2 = sqrt_interval(Rational(2), Rational(1, 1000000));
    CHECK(r2.width() <= Rational(1, 1000000));
    CHECK(r2.lo() * r2.lo() <= Rational(2));
    CHECK(r2.hi() * r2.hi() >= Rational(2));

    RationalInterval a(Rational(1), Rational(2)), b(Rational(-3), Rational(-1));
    RationalInterval p = a * b;
    CHECK(p.lo() == Rational(-6));
    CHECK(p.hi() == Rational(-1));
    CHECK(certainly_less(p, RationalInterval(Rational(0))));
    CHECK_THROWS_AS(RationalInterval(Rational(2), Rational(1)), std::domain_error);
    CHECK_THROWS_AS(reciprocal(RationalInterval(Rational(-1), Rational(1))), std::domain_error);

    QuadExt x(Rational(13), Rational(2, 7), 6);
    RationalInterval e = x.enclosure(Rational(1, 100000000));
    CHECK(e.width() <= Rational(1, 100000000));
    CHECK(e.contains(Rational(13699854, 1000000)) == false);
    CHECK(e.lo() > Rational(13699, 1000));
    CHECK(e.hi() < Rational(137, 10));
}

TEST_CASE("exact floors of surds") {
    CHECK(QuadExt(Rational(0), Rational(1), 2).floor() == 1);
    CHECK(QuadExt(Rational(13), Rational(2, 7), 6).floor() == 13);
    CHECK(QuadExt(Rational(0), Rational(-1), 2).floor() == -2);
    gen::Rng rng(19);
    for (int i = 0; i < 300; ++i) {
        QuadExt x = rng.surd(60, 300);
        Int f = x.floor();
        bigfloat v = to_bigfloat(x);
        CHECK(bigfloat(f.str()) <= v);
        CHECK(v < bigfloat(Int(f + 1).str()));
    }
}

TEST_CASE("surd term sums: exact signs across radicands") {
    // sqrt(2) + sqrt(3) - sqrt(5) is a nonzero combination.
    SurdTerms t;
    t.add(Rational(1), 2);
    t.add(Rational(1), 3);
    t.add(Rational(-1), 5);
    CHECK(t.sign() == 1);

    SurdTerms zero;
    zero.add(Rational(1), 2);
    zero.add(Rational(-1), 2);
    CHECK(zero.sign() == 0);
    CHECK(zero.is_zero());

    // (1+sqrt(2))(1+sqrt(3)) = 1 + sqrt(2) + sqrt(3) + sqrt(6).
    SurdTerms prod = SurdTerms(QuadExt(Rational(1), Rational(1), 2)) *
                     SurdTerms(QuadExt(Rational(1), Rational(1), 3));
    SurdTerms expect;
    expect.add(Rational(1), 1);
    expect.add(Rational(1), 2);
    expect.add(Rational(1), 3);
    expect.add(Rational(1), 6);
    CHECK((prod + (expect * SurdTerms(QuadExt(Rational(-1))))).is_zero());

    gen::Rng rng(20);
    for (int i = 0; i < 200; ++i) {
        QuadExt a = rng.surd(30, 50), b = rng.surd(30, 50);
        SurdTerms s = SurdTerms(a) * SurdTerms(b);
        bigfloat want = to_bigfloat(a) * to_bigfloat(b);
        int ws = want > bigfloat("1e-45") ? 1 : want < bigfloat("-1e-45") ? -1 : 0;
        if (ws != 0) CHECK(s.sign() == ws);
    }
}

TEST_CASE("decimal rendering truncates") {
    CHECK(decimal_truncate(Rational(137, 10), 3) == "13.700");
    CHECK(decimal_truncate(Rational(-51, 14), 2) == "-3.64");
    CHECK(decimal_truncate_sig(Rational(-51, 14), 3) == "-3.64");
    CHECK(decimal_truncate(Rational(1, 3), 4) == "0.3333");
    CHECK(decimal_truncate(Rational(-1, 10000), 3) == "0.000");
    CHECK(decimal_truncate_sig(Rational(123456), 2) == "120000");

    QuadExt a(Rational(13), Rational(2, 7), 6);
    CHECK(decimal_truncate_sig(a, 5) == "13.699");
    CHECK(decimal_truncate(a, 5) == "13.69985");
    QuadExt m(Rational(0), Rational(1, 12), 6);
    CHECK(decimal_truncate(m, 6) == "0.204124");
}
