#include <doctest.h>

#include "cfrac/series.hpp"
#include "helpers.hpp"

using namespace cfrac;
using namespace cfrac::testing;

namespace {
const Domain Q = Domain::rationals();

Series factorial_series(int order) {
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i) c.push_back(Rational(factorial(i)));
    return Series::from_rationals(Q, c);
}
} // namespace

TEST_CASE("add/sub and the min order rule") {
    Series one_plus_t = series_of(Q, {1, 1, 0});
    Series one = series_of(Q, {1, 0, 0});
    CHECK(one_plus_t - one == series_of(Q, {0, 1, 0}));

    Series f5 = Series::zero(Q, 5);
    Series g3 = Series::zero(Q, 3);
    CHECK((f5 + g3).order() == 3);
    CHECK((f5 - g3).order() == 3);
    CHECK((f5 * g3).order() == 3);

    Series f = series_of(Q, {2, -1, 3});
    CHECK((f - f) == Series::zero(Q, 2));
}

TEST_CASE("multiplication") {
    CHECK(series_of(Q, {1, 1, 0, 0}) * series_of(Q, {1, -1, 0, 0}) ==
          series_of(Q, {1, 0, -1, 0}));
    Series f = series_of(Q, {3, 1, 4, 1, 5});
    CHECK(f * Series::one(Q, 4) == f);
    // (sum n! t^n)^2 through t^3, frozen from the direct convolution of 1,1,2,6
    Series sq = factorial_series(3) * factorial_series(3);
    CHECK(sq == series_of(Q, {1, 2, 5, 16}));
}

TEST_CASE("reciprocal") {
    CHECK(series_of(Q, {1, -1, 0, 0, 0}).reciprocal() == series_of(Q, {1, 1, 1, 1, 1}));
    CHECK(factorial_series(5).reciprocal() == series_of(Q, {1, -1, -1, -3, -13, -71}));

    Domain P = Domain::polynomials({"x", "y"});
    Value x = Value::variable(P, "x");
    Series f(P, {Value::one(P), x, Value::zero(P), Value::zero(P)});
    Series r = f.reciprocal();
    CHECK(r.coeff(1) == -x);
    CHECK(r.coeff(2) == x * x);
    CHECK(r.coeff(3) == -(x * x * x));

    CHECK_THROWS_AS(series_of(Q, {0, 1}).reciprocal(), NonUnitConstantTerm);
    // over a polynomial ring the constant term must be exactly 1
    Series two(P, {qv(P, 2), x});
    CHECK_THROWS_AS(two.reciprocal(), NonUnitConstantTerm);

    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Series f2 = rng.rational_series(Q, rng.uniform(0, 12), true);
        CHECK(f2.reciprocal().reciprocal() == f2);
    }
}

TEST_CASE("shift_down") {
    CHECK(series_of(Q, {0, 1, 1}).shifted_down(1) == series_of(Q, {1, 1}));
    CHECK(series_of(Q, {0, 0, 1}).shifted_down(2) == series_of(Q, {1}));
    CHECK_THROWS_AS(series_of(Q, {1, 1}).shifted_down(1), NonzeroLowCoefficients);
    CHECK_THROWS_AS(series_of(Q, {0, 1}).shifted_down(2), OrderUnderflow);
}

TEST_CASE("log1 and exp0") {
    Series one_plus_t = series_of(Q, {1, 1, 0, 0, 0, 0});
    CHECK(one_plus_t.log1().exp0() == one_plus_t);

    // log(sec t) through t^6 = t^2/2 + t^4/12 + t^6/45
    std::vector<Rational> cos_c;
    for (int m = 0; m <= 6; ++m) {
        Rational v(0);
        if (m % 2 == 0) {
            v = Rational(1) / Rational(factorial(m));
            if (m % 4 == 2) v = -v;
        }
        cos_c.push_back(v);
    }
    Series sec = Series::from_rationals(Q, cos_c).reciprocal();
    Series ls = sec.log1();
    CHECK(ls.coeff(2) == qv(Q, 1, 2));
    CHECK(ls.coeff(4) == qv(Q, 1, 12));
    CHECK(ls.coeff(6) == qv(Q, 1, 45));
    CHECK(ls.coeff(1).is_zero());
    CHECK(ls.coeff(3).is_zero());
    CHECK(ls.coeff(5).is_zero());

    Series t = series_of(Q, {0, 1, 0, 0});
    Series e = t.exp0();
    CHECK(e == Series(Q, {qv(Q, 1), qv(Q, 1), qv(Q, 1, 2), qv(Q, 1, 6)}));

    CHECK_THROWS_AS(series_of(Q, {2, 1}).log1(), ConstantTermViolation);
    CHECK_THROWS_AS(series_of(Q, {1, 1}).exp0(), ConstantTermViolation);

    Rng rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform(1, 10);
        Series f = rng.rational_series(Q, n, false);
        std::vector<Value> c = f.coeffs();
        c[0] = Value::zero(Q);
        Series z(Q, c);
        CHECK(z.exp0().log1() == z);
        c[0] = Value::one(Q);
        Series u(Q, c);
        CHECK(u.log1().exp0() == u);
    }
}

TEST_CASE("multiplication laws on random series") {
    Rng rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        Series f = rng.rational_series(Q, rng.uniform(0, 8), false);
        Series g = rng.rational_series(Q, rng.uniform(0, 8), false);
        Series h = rng.rational_series(Q, rng.uniform(0, 8), false);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        int n = std::min({f.order(), g.order(), h.order()});
        CHECK((f + g) * h == (f * h + g * h).truncated(n));
    }
}

TEST_CASE("order bookkeeping follows the stated rules") {
    Rng rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        int nf = rng.uniform(0, 10), ng = rng.uniform(0, 10);
        Series f = rng.rational_series(Q, nf, true);
        Series g = rng.rational_series(Q, ng, false);
        CHECK((f + g).order() == std::min(nf, ng));
        CHECK((f - g).order() == std::min(nf, ng));
        CHECK((f * g).order() == std::min(nf, ng));
        CHECK(f.reciprocal().order() == nf);
        if (nf >= 1) {
            std::vector<Value> c = f.coeffs();
            int p = rng.uniform(1, nf);
            for (int i = 0; i < p; ++i) c[i] = Value::zero(Q);
            CHECK(Series(Q, c).shifted_down(p).order() == nf - p);
        }
        std::vector<Value> c = f.coeffs();
        c[0] = Value::one(Q);
        CHECK(Series(Q, c).log1().order() == nf);
        c[0] = Value::zero(Q);
        CHECK(Series(Q, c).exp0().order() == nf);
    }
}

TEST_CASE("zero-length truncation degenerates gracefully") {
    Series c = series_of(Q, {5});
    CHECK((c + c).order() == 0);
    CHECK((c * c).coeff(0) == qv(Q, 25));
    CHECK(c.reciprocal().coeff(0) == qv(Q, 1, 5));
}
