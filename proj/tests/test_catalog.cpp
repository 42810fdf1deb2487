#include <doctest.h>

#include "cfrac/catalog.hpp"
#include "cfrac/expand.hpp"
#include "helpers.hpp"

using namespace cfrac;
using namespace cfrac::testing;

namespace {
const Domain Q = Domain::rationals();

// Every set partition of {1..n}, counted directly (restricted-growth strings).
long bell_number_by_enumeration(int n) {
    if (n == 0) return 1;
    std::vector<int> rgs(n, 0);
    long count = 0;
    while (true) {
        ++count;
        int i = n - 1;
        for (; i >= 1; --i) {
            int maxv = 0;
            for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
            if (rgs[i] <= maxv) {
                ++rgs[i];
                for (int j = i + 1; j < n; ++j) rgs[j] = 0;
                break;
            }
        }
        if (i == 0) break;
    }
    return count;
}
} // namespace

TEST_CASE("bell numbers") {
    Series b = generate({"bell", {{"x", ParamValue::num(Rational(1))},
                                  {"y", ParamValue::num(Rational(1))}},
                         6});
    CHECK(b.domain() == Q);
    std::vector<long> expect{1, 1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 6; ++n) {
        CHECK(b.coeff(n) == qv(Q, expect[n]));
        CHECK(b.coeff(n) == qv(Q, bell_number_by_enumeration(n)));
    }
}

TEST_CASE("rising factorial with a symbolic parameter") {
    Series r = generate({"rising_factorial", {}, 3});
    Domain d = r.domain();
    Value a = Value::variable(d, "a");
    CHECK(r.coeff(0).is_one());
    CHECK(r.coeff(1) == a);
    CHECK(r.coeff(2) == a * (a + Value::one(d)));
    CHECK(r.coeff(3) == a * (a + Value::one(d)) * (a + qv(d, 2)));

    Series half = generate({"rising_factorial", {{"a", ParamValue::num(rat(1, 2))}}, 3});
    CHECK(half.domain() == Q);
    CHECK(half.coeff(2) == qv(Q, 3, 4));
}

TEST_CASE("secant power polynomials") {
    Series e1 = generate({"secant_power", {{"x", ParamValue::num(Rational(1))}}, 4});
    std::vector<long> secant{1, 1, 5, 61, 1385};
    for (int n = 0; n <= 4; ++n) CHECK(e1.coeff(n) == qv(Q, secant[n]));

    Series ex = generate({"secant_power", {}, 3});
    Domain d = ex.domain();
    Value x = Value::variable(d, "x");
    CHECK(ex.coeff(0).is_one());
    CHECK(ex.coeff(1) == x);                                       // E_2(x) = x
    CHECK(ex.coeff(2) == (x * x).scaled(Rational(3)) + x.scaled(Rational(2)));
}

TEST_CASE("tangent ratio and the double factorials") {
    Series t = generate({"tan_ratio", {}, 3});
    CHECK(t.coeff(0) == qv(Q, 1));
    CHECK(t.coeff(1) == qv(Q, 1, 3));
    CHECK(t.coeff(2) == qv(Q, 2, 15));
    CHECK(t.coeff(3) == qv(Q, 17, 315));

    Series df = generate({"odd_double_factorial", {}, 5});
    std::vector<long> expect{1, 1, 3, 15, 105, 945};
    for (int n = 0; n <= 5; ++n) CHECK(df.coeff(n) == qv(Q, expect[n]));
    Expansion e = expand_refined(df, ExpansionShape::c_fraction());
    for (int k = 1; k <= 5; ++k) CHECK(e.cf.terms[k - 1].alpha == qv(Q, k));
}

TEST_CASE("q-binomials") {
    Domain d = q_polynomial_domain();
    Value q = Value::variable(d, "q");
    Value one = Value::one(d);
    CHECK(qbinomial(4, 2) == one + q + (q * q).scaled(Rational(2)) + q * q * q + q * q * q * q);
    CHECK(qbinomial(7, 0).is_one());
    CHECK(qbinomial(7, 7).is_one());
    CHECK_THROWS_AS(qbinomial(3, 4), IndexOutOfRange);

    // ratio definition: (q;q)_n = qbinom(n,k) (q;q)_k (q;q)_{n-k}
    auto qpoch = [&](int n) {
        Value acc = one;
        for (int j = 1; j <= n; ++j) {
            Value qj = Value::of_mpoly(
                d, MPoly::monomial(1, {static_cast<unsigned>(j)}, Rational(1)));
            acc = acc * (one - qj);
        }
        return acc;
    };
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(Value::exact_div(qpoch(n), qpoch(k) * qpoch(n - k)) == qbinomial(n, k));

    // specialization at q = 1 gives the binomial coefficients
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            MPoly at1 = qbinomial(n, k).as_mpoly().eval_partial({Rational(1)});
            CHECK(at1.constant_value() == Rational(binomial(n, k)));
        }
    }
}

TEST_CASE("record statistics oracle") {
    Domain d = dumont_kreweras_domain();
    Value a = Value::variable(d, "a"), b = Value::variable(d, "b");
    CHECK(dumont_kreweras_oracle(0).is_one());
    CHECK(dumont_kreweras_oracle(1) == a);
    CHECK(dumont_kreweras_oracle(2) == a * a + a * b);
    for (int n = 0; n <= 6; ++n) {
        MPoly at11 = dumont_kreweras_oracle(n).as_mpoly().eval_partial(
            {Rational(1), Rational(1)});
        CHECK(at11.constant_value() == Rational(factorial(n)));
    }
    // cross-module: the ratio coefficients count records/exclusive antirecords
    Series f = generate({"f20_ratio", {}, 5});
    for (int n = 0; n <= 5; ++n) CHECK(f.coeff(n) == dumont_kreweras_oracle(n));
    CHECK_THROWS_AS(dumont_kreweras_oracle(9), SizeLimit);
}

TEST_CASE("every g_k family passes its recurrence check") {
    for (const std::string& name : gk_family_names()) {
        CAPTURE(name);
        GkFamily fam = gk_family(name);
        std::vector<Series> gs, ds, as;
        for (int k = -1; k <= 6; ++k) gs.push_back(fam.g(k, 8));
        for (int k = 1; k <= 6; ++k) {
            ds.push_back(fam.delta(k, 8));
            as.push_back(fam.a(k, 8));
        }
        RecurrenceReport rep = euler_gauss_verify(gs, ds, as, 8);
        CAPTURE(rep.to_string());
        CHECK(rep.ok);
    }
}

TEST_CASE("family g coefficients are spot-checkable") {
    GkFamily fam = gk_family("factorial");
    // g_4 at t^2 equals binom(4,2)^2 * 2! = 72
    CHECK(fam.g(4, 3).coeff(2) == qv(Q, 72));
    // the delta data of every catalog family vanishes (pure falls)
    CHECK(fam.delta(3, 5) == Series::zero(Q, 5));
}

TEST_CASE("documented alpha patterns reproduce under expansion") {
    auto alphas_of = [](const SeriesSpec& spec) {
        Expansion e = expand_refined(generate(spec), ExpansionShape::c_fraction());
        return e.cf;
    };

    CFraction fact = alphas_of({"factorial", {}, 10});
    for (int k = 1; k <= 10; ++k)
        CHECK(fact.terms[k - 1].alpha == qv(Q, (k + 1) / 2));

    CFraction rising = alphas_of({"rising_factorial", {}, 10});
    {
        Domain d = rising.domain;
        Value a = Value::variable(d, "a");
        for (int k = 1; k <= 10; ++k) {
            Value expect = (k % 2) ? a + qv(d, (k + 1) / 2 - 1) : qv(d, k / 2);
            CHECK(rising.terms[k - 1].alpha == expect);
        }
    }

    CFraction f20 = alphas_of({"f20_ratio", {}, 10});
    {
        Domain d = f20.domain;
        Value a = Value::variable(d, "a"), b = Value::variable(d, "b");
        for (int k = 1; k <= 10; ++k) {
            long j = (k + 1) / 2;
            Value expect = (k % 2) ? a + qv(d, j - 1) : b + qv(d, j - 1);
            CHECK(f20.terms[k - 1].alpha == expect);
        }
    }

    CFraction sec = alphas_of({"secant_power", {}, 8});
    {
        Domain d = sec.domain;
        Value x = Value::variable(d, "x");
        for (int k = 1; k <= 8; ++k)
            CHECK(sec.terms[k - 1].alpha == (x + qv(d, k - 1)).scaled(Rational(k)));
    }

    CFraction rra = alphas_of({"rr_a_ratio", {}, 8});
    {
        GkFamily fam = gk_family("rr_a");
        for (int k = 1; k <= 8; ++k) CHECK(rra.terms[k - 1].alpha == fam.alpha(k));
    }

    CFraction pt = alphas_of({"partial_theta", {}, 10});
    {
        GkFamily fam = gk_family("partial_theta");
        for (int k = 1; k <= 10; ++k) CHECK(pt.terms[k - 1].alpha == fam.alpha(k));
    }
}

TEST_CASE("one-parameter Ramanujan coefficient shapes") {
    Rational a = rat(1, 3);
    GkFamily sym = gk_family("rr_a", {{"a", ParamValue::num(a)}});
    GkFamily asym = gk_family("rr_a_asym", {{"a", ParamValue::num(a)}});
    Domain F = q_field_domain();
    auto one_minus_aq = [&](int e) { // 1 - a q^e
        return UPoly(Rational(1)) - UPoly::monomial(e, a);
    };
    // symmetric: alpha_k = -q^{k-1} / ((1 - a q^{k-1})(1 - a q^k))
    for (int k = 1; k <= 5; ++k) {
        Value expect = Value::of_ratfun(
            F, RatFun(UPoly::monomial(k - 1, Rational(-1)),
                      one_minus_aq(k - 1) * one_minus_aq(k)));
        CHECK(sym.alpha(k) == expect);
    }
    // asymmetric: one factor in the first denominator, two afterwards
    CHECK(asym.alpha(1) ==
          Value::of_ratfun(F, RatFun(UPoly(Rational(-1)), one_minus_aq(0))));
    for (int k = 2; k <= 5; ++k) {
        Value expect = Value::of_ratfun(
            F, RatFun(UPoly::monomial(k - 1, Rational(-1)),
                      one_minus_aq(k - 2) * one_minus_aq(k - 1)));
        CHECK(asym.alpha(k) == expect);
    }
    CHECK_THROWS_AS(gk_family("rr_a", {{"a", ParamValue::num(Rational(1))}}), BadParams);
    CHECK_THROWS_AS(gk_family("rr_a", {{"a", ParamValue::sym()}}), BadParams);
}

TEST_CASE("moment probe") {
    Series p = generate({"moment_probe", {{"eps", ParamValue::num(rat(1, 2))}}, 6});
    for (int n = 0; n <= 6; ++n) {
        Rational expect =
            rat(3, 2) * Rational(factorial(n)) - rat(1, 2) / Rational((n + 1) * (n + 1));
        CHECK(p.coeff(n) == Value::of_rational(Q, expect));
    }
    // eps = 0 reduces to the factorials, and the scan stays positive
    Series z = generate({"moment_probe", {{"eps", ParamValue::num(Rational(0))}}, 12});
    CHECK(z == generate({"factorial", {}, 12}));
    std::vector<Rational> seq;
    for (int i = 0; i <= 12; ++i) seq.push_back(z.coeff(i).as_rational());
    CHECK(stieltjes_positivity_scan(seq).kind == ScanResult::Kind::BudgetExhausted);
}

TEST_CASE("bad requests") {
    CHECK_THROWS_AS(generate({"no_such_family", {}, 4}), UnknownFamily);
    CHECK_THROWS_AS(generate({"factorial", {{"bogus", ParamValue::num(Rational(1))}}, 4}),
                    BadParams);
    CHECK_THROWS_AS(generate({"rr_a_ratio", {{"a", ParamValue::sym()}}, 4}), BadParams);
    CHECK_THROWS_AS(gk_family("nope"), UnknownFamily);
    CHECK_THROWS_AS(generate({"factorial", {}, -1}), BadParams);
}

TEST_CASE("family list is complete") {
    const auto& fams = list_families();
    CHECK(fams.size() == 11);
    for (const auto& f : fams) {
        SeriesSpec spec{f.name, {}, 3};
        if (f.name == "moment_probe") spec.params.emplace("eps", ParamValue::num(Rational(1)));
        Series s = generate(spec);
        CHECK(s.order() == 3);
        CHECK_FALSE(f.pattern_note.empty());
    }
}
