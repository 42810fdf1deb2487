#include "cfrac/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace cfrac {

namespace {

// Resolve the domain induced by a family's parameters: the polynomial ring on
// the symbolic ones (in the family's declared order), or Q if none are.
struct ParamEnv {
    Domain dom;
    std::map<std::string, Value> vals;

    const Value& at(const std::string& name) const { return vals.at(name); }
};

ParamValue param_or(const std::map<std::string, ParamValue>& given, const std::string& name,
                    const ParamValue& dflt) {
    auto it = given.find(name);
    return it == given.end() ? dflt : it->second;
}

void reject_unknown_params(const std::map<std::string, ParamValue>& given,
                           const std::vector<std::string>& known) {
    for (const auto& [k, v] : given)
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw BadParams("unknown parameter '" + k + "'");
}

ParamEnv derive_env(const std::vector<std::string>& names,
                    const std::map<std::string, ParamValue>& given, const ParamValue& dflt) {
    reject_unknown_params(given, names);
    std::vector<std::string> sym;
    for (const auto& n : names)
        if (param_or(given, n, dflt).symbolic) sym.push_back(n);
    ParamEnv env;
    env.dom = sym.empty() ? Domain::rationals() : Domain::polynomials(sym);
    for (const auto& n : names) {
        ParamValue p = param_or(given, n, dflt);
        env.vals.emplace(n, p.symbolic ? Value::variable(env.dom, n)
                                       : Value::of_rational(env.dom, p.value));
    }
    return env;
}

Rational require_numeric(const std::map<std::string, ParamValue>& given, const std::string& name,
                         const Rational& dflt) {
    ParamValue p = param_or(given, name, ParamValue::num(dflt));
    if (p.symbolic)
        throw BadParams("parameter '" + name +
                        "' must be a rational here (symbolic values would need bivariate "
                        "rational functions)");
    return p.value;
}

// base (base+1) ... (base+n-1)
Value rising_power(const Value& base, int n) {
    Value acc = Value::one(base.domain());
    for (int i = 0; i < n; ++i)
        acc = acc * (base + Value::of_rational(base.domain(), Rational(i)));
    return acc;
}

// (a q^m; q)_n as a polynomial in q.
UPoly qpoch(const Rational& a, int m, int n) {
    UPoly acc(Rational(1));
    for (int j = 0; j < n; ++j)
        acc = acc * (UPoly(Rational(1)) - UPoly::monomial(m + j, a));
    return acc;
}

Value q_power_over_poch(const Domain& qq, int num_exp, const UPoly& den) {
    return Value::of_ratfun(qq, RatFun(UPoly::monomial(num_exp, Rational(1)), den));
}

std::vector<std::vector<Integer>> stirling_rows(int n_max) {
    // {n over k} = k {n-1 over k} + {n-1 over k-1}, {0 over k} = [k = 0]
    std::vector<std::vector<Integer>> s(n_max + 1);
    s[0] = {Integer(1)};
    for (int n = 1; n <= n_max; ++n) {
        s[n].assign(n + 1, Integer(0));
        for (int k = 1; k <= n; ++k) {
            Integer v = s[n - 1][k - 1];
            if (k <= n - 1) v += k * s[n - 1][k];
            s[n][k] = v;
        }
    }
    return s;
}

Series cosine_series(const Domain& d, int order) {
    std::vector<Value> c(order + 1, Value::zero(d));
    for (int m = 0; m <= order; m += 2) {
        Rational v(1);
        v /= factorial(m);
        if (m % 4 == 2) v = -v;
        c[m] = Value::of_rational(d, v);
    }
    return Series(d, std::move(c));
}

// Ordinary coefficients of sum E_{2n}(x) t^n from (sec t)^x = exp(x log sec t).
Series secant_power_series(const ParamEnv& env, int order) {
    Series sec = cosine_series(env.dom, 2 * order).reciprocal();
    Series eg = sec.log1().scaled(env.at("x")).exp0();
    std::vector<Value> c;
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        Rational f(factorial(2 * n));
        c.push_back(eg.coeff(2 * n).scaled(f));
    }
    return Series(env.dom, std::move(c));
}

Series bell_series(const ParamEnv& env, int order) {
    auto s = stirling_rows(order);
    const Value& x = env.at("x");
    const Value& y = env.at("y");
    std::vector<Value> c;
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        Value acc = Value::zero(env.dom);
        Value xp = Value::one(env.dom);
        std::vector<Value> ypow(n + 1, Value::one(env.dom));
        for (int i = 1; i <= n; ++i) ypow[i] = ypow[i - 1] * y;
        for (int k = 0; k <= n; ++k) {
            if (s[n][k] != 0)
                acc = acc + (xp * ypow[n - k]).scaled(Rational(s[n][k]));
            xp = xp * x;
        }
        c.push_back(acc);
    }
    return Series(env.dom, std::move(c));
}

Series f20_series(const ParamEnv& env, const Value& a, const Value& b, int order) {
    std::vector<Value> c;
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        Rational inv_fact(1);
        inv_fact /= factorial(n);
        c.push_back((rising_power(a, n) * rising_power(b, n)).scaled(inv_fact));
    }
    return Series(env.dom, std::move(c));
}

// q-binomial triangle with polynomial entries, by the q-Pascal recurrence.
std::vector<std::vector<UPoly>> qbinom_triangle(int n) {
    std::vector<std::vector<UPoly>> t(n + 1);
    t[0] = {UPoly(Rational(1))};
    for (int m = 1; m <= n; ++m) {
        t[m].assign(m + 1, UPoly());
        for (int j = 0; j <= m; ++j) {
            UPoly v = (j <= m - 1) ? t[m - 1][j] : UPoly();
            if (j >= 1)
                v = v + UPoly::monomial(m - j, Rational(1)) * t[m - 1][j - 1];
            t[m][j] = v;
        }
    }
    return t;
}

// R(qt,q)/R(t,q) with R(t,q) = sum q^{n(n-1)}/(q;q)_n t^n. The coefficients
// are carried as polynomial numerators over the implicit denominators
// (q;q)_n; cross products merge through q-binomials, which keeps the whole
// convolution inside Q[q] (no rational-function gcds until the final
// canonicalization).
Series rr_ratio_series(const Domain& qq, int order) {
    auto qb = qbinom_triangle(order);
    std::vector<UPoly> u(order + 1), w(order + 1), v(order + 1);
    for (int n = 0; n <= order; ++n) {
        u[n] = UPoly::monomial(n * (n - 1), Rational(1));
        w[n] = UPoly::monomial(n * n, Rational(1));
    }
    v[0] = UPoly(Rational(1));
    for (int n = 1; n <= order; ++n) {
        UPoly acc;
        for (int i = 1; i <= n; ++i) acc = acc + u[i] * v[n - i] * qb[n][i];
        v[n] = -acc;
    }
    std::vector<Value> c;
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        UPoly acc;
        for (int i = 0; i <= n; ++i) acc = acc + w[i] * v[n - i] * qb[n][i];
        c.push_back(Value::of_ratfun(qq, RatFun(acc, qpoch(Rational(1), 1, n))));
    }
    return Series(qq, std::move(c));
}

Series rr_numerator(const Domain& qq, const Rational& a, bool shift_a, int order) {
    // sum q^{n^2} / ((q;q)_n (aq^{s};q)_n) with s = 1 when shift_a, else 0;
    // a = 0 drops the extra Pochhammer entirely.
    std::vector<Value> c;
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        UPoly den = qpoch(Rational(1), 1, n);
        if (a != 0) den = den * qpoch(a, shift_a ? 1 : 0, n);
        c.push_back(q_power_over_poch(qq, n * n, den));
    }
    return Series(qq, std::move(c));
}

Series rr_denominator(const Domain& qq, const Rational& a, int order) {
    std::vector<Value> c;
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        UPoly den = qpoch(Rational(1), 1, n);
        if (a != 0) den = den * qpoch(a, 0, n);
        c.push_back(q_power_over_poch(qq, n * (n - 1), den));
    }
    return Series(qq, std::move(c));
}

} // namespace

Domain q_polynomial_domain() { return Domain::polynomials({"q"}); }
Domain q_field_domain() { return Domain::rational_functions("q"); }

Integer stirling_subset(int n, int k) {
    if (n < 0 || k < 0) return Integer(0);
    if (k > n) return Integer(0);
    auto rows = stirling_rows(n);
    return rows[n][k];
}

Value qbinomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw IndexOutOfRange("qbinomial needs 0 <= k <= n");
    Domain d = q_polynomial_domain();
    MPoly one = MPoly::constant(1, Rational(1));
    auto qpow = [&](int e) { return MPoly::monomial(1, {static_cast<unsigned>(e)}, Rational(1)); };
    // rows of the q-Pascal triangle, by both dual recurrences
    std::vector<MPoly> row1 = {one}, row2 = {one};
    for (int m = 1; m <= n; ++m) {
        std::vector<MPoly> next1(m + 1, MPoly(1)), next2(m + 1, MPoly(1));
        for (int j = 0; j <= m; ++j) {
            // [m j] = [m-1 j] + q^{m-j} [m-1 j-1]
            MPoly v1 = (j <= m - 1) ? row1[j] : MPoly(1);
            if (j >= 1) v1 = v1 + qpow(m - j) * row1[j - 1];
            next1[j] = v1;
            // [m j] = q^j [m-1 j] + [m-1 j-1]
            MPoly v2 = (j <= m - 1) ? qpow(j) * row2[j] : MPoly(1);
            if (j >= 1) v2 = v2 + row2[j - 1];
            next2[j] = v2;
        }
        row1 = std::move(next1);
        row2 = std::move(next2);
    }
    if (!(row1[k] == row2[k]))
        throw Error("q-Pascal recurrences disagree; arithmetic is broken");
    return Value::of_mpoly(d, row1[k]);
}

Domain dumont_kreweras_domain() { return Domain::polynomials({"a", "b"}); }

Value dumont_kreweras_oracle(int n) {
    if (n < 0) throw IndexOutOfRange("negative permutation size");
    if (n > 8) throw SizeLimit("permutation enumeration is capped at n = 8");
    Domain d = dumont_kreweras_domain();
    MPoly acc(2);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int rec = 0, earec = 0;
        for (int i = 0; i < n; ++i) {
            bool is_rec = true;
            for (int j = 0; j < i; ++j)
                if (perm[j] > perm[i]) { is_rec = false; break; }
            bool is_arec = true;
            for (int j = i + 1; j < n; ++j)
                if (perm[j] < perm[i]) { is_arec = false; break; }
            if (is_rec) ++rec;
            if (is_arec && !is_rec) ++earec;
        }
        acc = acc + MPoly::monomial(2, {static_cast<unsigned>(rec), static_cast<unsigned>(earec)},
                                    Rational(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) acc = MPoly::constant(2, Rational(1)); // the empty permutation
    return Value::of_mpoly(d, acc);
}

Series generate(const SeriesSpec& spec) {
    int n = spec.order;
    if (n < 0) throw BadParams("order must be nonnegative");
    const auto& P = spec.params;
    const std::string& fam = spec.family;
    Domain Q = Domain::rationals();

    if (fam == "factorial") {
        reject_unknown_params(P, {});
        std::vector<Rational> c;
        for (int i = 0; i <= n; ++i) c.push_back(Rational(factorial(i)));
        return Series::from_rationals(Q, c);
    }
    if (fam == "rising_factorial") {
        ParamEnv env = derive_env({"a"}, P, ParamValue::sym());
        std::vector<Value> c;
        for (int i = 0; i <= n; ++i) c.push_back(rising_power(env.at("a"), i));
        return Series(env.dom, std::move(c));
    }
    if (fam == "odd_double_factorial") {
        reject_unknown_params(P, {});
        std::vector<Rational> c;
        for (int i = 0; i <= n; ++i) c.push_back(Rational(odd_double_factorial(i)));
        return Series::from_rationals(Q, c);
    }
    if (fam == "bell") {
        ParamEnv env = derive_env({"x", "y"}, P, ParamValue::sym());
        return bell_series(env, n);
    }
    if (fam == "f20_ratio") {
        ParamEnv env = derive_env({"a", "b"}, P, ParamValue::sym());
        Value bm1 = env.at("b") - Value::one(env.dom);
        Series num = f20_series(env, env.at("a"), env.at("b"), n);
        Series den = f20_series(env, env.at("a"), bm1, n);
        return num * den.reciprocal();
    }
    if (fam == "tan_ratio") {
        reject_unknown_params(P, {});
        // tan t / t reindexed in u = t^2: (sin t / t) / cos t
        std::vector<Rational> sc, cc;
        for (int i = 0; i <= n; ++i) {
            Rational s(1), c(1);
            s /= factorial(2 * i + 1);
            c /= factorial(2 * i);
            if (i % 2 == 1) { s = -s; c = -c; }
            sc.push_back(s);
            cc.push_back(c);
        }
        return Series::from_rationals(Q, sc) * Series::from_rationals(Q, cc).reciprocal();
    }
    if (fam == "partial_theta") {
        reject_unknown_params(P, {});
        Domain d = q_polynomial_domain();
        std::vector<Value> c;
        for (int i = 0; i <= n; ++i)
            c.push_back(Value::of_mpoly(
                d, MPoly::monomial(1, {static_cast<unsigned>(i * (i - 1) / 2)}, Rational(1))));
        return Series(d, std::move(c));
    }
    if (fam == "rr_ratio") {
        reject_unknown_params(P, {});
        return rr_ratio_series(q_field_domain(), n);
    }
    if (fam == "rr_a_ratio") {
        reject_unknown_params(P, {"a"});
        Rational a = require_numeric(P, "a", rat(1, 2));
        Domain qq = q_field_domain();
        if (a == 1) throw BadParams("a = 1 makes the leading coefficient singular");
        return rr_numerator(qq, a, true, n) * rr_denominator(qq, a, n).reciprocal();
    }
    if (fam == "secant_power") {
        ParamEnv env = derive_env({"x"}, P, ParamValue::sym());
        return secant_power_series(env, n);
    }
    if (fam == "moment_probe") {
        reject_unknown_params(P, {"eps"});
        Rational eps = require_numeric(P, "eps", Rational(1));
        std::vector<Rational> c;
        for (int i = 0; i <= n; ++i) {
            Rational v = (1 + eps) * Rational(factorial(i)) - eps / Rational((i + 1) * (i + 1));
            c.push_back(v);
        }
        return Series::from_rationals(Q, c);
    }
    throw UnknownFamily("no series family named '" + fam + "'");
}

const std::vector<FamilyInfo>& list_families() {
    static const std::vector<FamilyInfo> families = {
        {"factorial", {}, "Q",
         "a_n = n!; regular C-fraction alpha = 1,1,2,2,3,3,... (Euler 1760)"},
        {"rising_factorial", {"a"}, "Q[a] (or Q for rational a)",
         "a_n = a(a+1)...(a+n-1); alpha_{2j-1} = a+j-1, alpha_{2j} = j (Euler 1776)"},
        {"odd_double_factorial", {}, "Q",
         "a_n = (2n-1)!!; alpha_k = k (Euler's a = 1/2 specialization)"},
        {"bell", {"x", "y"}, "Q[x,y] (or Q)",
         "a_n = B_n(x,y) from the Stirling subset recurrence; alpha = x,y,x,2y,x,3y,..."},
        {"f20_ratio", {"a", "b"}, "Q[a,b] (or Q)",
         "2F0(a,b)/2F0(a,b-1); alpha = a,b,a+1,b+1,... (Gauss-style contiguous ratio); "
         "coefficients count permutations by records/exclusive antirecords "
         "(Dumont-Kreweras 1988)"},
        {"tan_ratio", {}, "Q",
         "tan t / t in u = t^2; alpha_k = 1/((2k-1)(2k+1)) (Lambert 1768)"},
        {"partial_theta", {}, "Q[q]",
         "a_n = q^{n(n-1)/2}; alpha_{2j-1} = q^{2j-2}, alpha_{2j} = q^{j-1}(q^j - 1) "
         "(Eisenstein 1844, Ramanujan)"},
        {"rr_ratio", {}, "Q(q)",
         "R(qt,q)/R(t,q); alpha_k = -q^{k-1} (Rogers 1894, Ramanujan)"},
        {"rr_a_ratio", {"a"}, "Q(q), rational a",
         "the one-parameter Rogers-Ramanujan ratio; "
         "alpha_k = -q^{k-1}/((1-aq^{k-1})(1-aq^k)) (Ramanujan)"},
        {"secant_power", {"x"}, "Q[x] (or Q)",
         "a_n = E_{2n}(x) from (sec t)^x; alpha_k = k(x+k-1) (Stieltjes 1889, Rogers 1907)"},
        {"moment_probe", {"eps"}, "Q",
         "a_n = (1+eps) n! - eps/(n+1)^2; a non-Stieltjes sequence whose first negative "
         "alpha appears late (positivity-scan fixture)"},
    };
    return families;
}

// ---------------------------------------------------------------------------
// Closed-form g_k families

namespace {

Series zero_series(const Domain& d, int order) { return Series::zero(d, order); }

Series alpha_t_series(const Domain& d, const Value& alpha, int order) {
    std::vector<Value> c(order + 1, Value::zero(d));
    if (order >= 1) c[1] = alpha;
    return Series(d, std::move(c));
}

GkFamily make_sfrac_family(std::string name, Domain dom,
                           std::function<Value(int, int)> coeff, // (k, n) -> g_{k,n}
                           std::function<Value(int)> alpha) {
    GkFamily f;
    f.name = std::move(name);
    f.domain = dom;
    f.alpha = alpha;
    f.g = [dom, coeff](int k, int order) {
        std::vector<Value> c;
        c.reserve(order + 1);
        for (int n = 0; n <= order; ++n)
            c.push_back(n == 0 ? Value::one(dom) : coeff(k, n));
        return Series(dom, std::move(c));
    };
    f.delta = [dom](int, int order) { return zero_series(dom, order); };
    f.a = [dom, alpha](int k, int order) { return alpha_t_series(dom, alpha(k), order); };
    return f;
}

Value binom_value(const Domain& d, long n, long k) {
    if (k < 0 || n < 0 || k > n) return Value::zero(d);
    return Value::of_rational(d, Rational(binomial(n, k)));
}

} // namespace

std::vector<std::string> gk_family_names() {
    return {"factorial", "rising_factorial", "f20", "bell", "partial_theta",
            "rr", "rr_a", "rr_a_asym"};
}

GkFamily gk_family(const std::string& name, const std::map<std::string, ParamValue>& params) {
    if (name == "factorial") {
        reject_unknown_params(params, {});
        Domain Q = Domain::rationals();
        auto coeff = [Q](int k, int n) {
            long j = (k % 2 != 0) ? (k + 1) / 2 : k / 2;
            Rational v(factorial(n));
            if (k % 2 != 0)
                return Value::of_rational(Q, v * binomial(n + j, n) * binomial(n + j - 1, n));
            return Value::of_rational(Q, v * binomial(n + j, n) * binomial(n + j, n));
        };
        auto alpha = [Q](int k) {
            long j = (k % 2 != 0) ? (k + 1) / 2 : k / 2;
            return Value::of_rational(Q, Rational(j));
        };
        return make_sfrac_family("factorial", Q, coeff, alpha);
    }
    if (name == "rising_factorial") {
        ParamEnv env = derive_env({"a"}, params, ParamValue::sym());
        Domain d = env.dom;
        Value a = env.at("a");
        auto coeff = [d, a](int k, int n) {
            long j = (k % 2 != 0) ? (k + 1) / 2 : k / 2;
            Value base = a + Value::of_rational(d, Rational(j));
            Value rp = rising_power(base, n);
            long top = (k % 2 != 0) ? n + j - 1 : n + j;
            return rp * binom_value(d, top, n);
        };
        auto alpha = [d, a](int k) {
            if (k % 2 != 0) {
                long j = (k + 1) / 2;
                return a + Value::of_rational(d, Rational(j - 1));
            }
            return Value::of_rational(d, Rational(k / 2));
        };
        return make_sfrac_family("rising_factorial", d, coeff, alpha);
    }
    if (name == "f20") {
        ParamEnv env = derive_env({"a", "b"}, params, ParamValue::sym());
        Domain d = env.dom;
        Value a = env.at("a"), b = env.at("b");
        auto coeff = [d, a, b](int k, int n) {
            long j = (k % 2 != 0) ? (k + 1) / 2 : k / 2;
            Value abase = a + Value::of_rational(d, Rational(j));
            Value bbase = b + Value::of_rational(d, Rational(k % 2 != 0 ? j - 1 : j));
            Rational inv_fact(1);
            inv_fact /= factorial(n);
            return (rising_power(abase, n) * rising_power(bbase, n)).scaled(inv_fact);
        };
        auto alpha = [d, a, b](int k) {
            long j = (k + 1) / 2;
            if (k % 2 != 0) return a + Value::of_rational(d, Rational(j - 1));
            return b + Value::of_rational(d, Rational(k / 2 - 1));
        };
        return make_sfrac_family("f20", d, coeff, alpha);
    }
    if (name == "bell") {
        ParamEnv env = derive_env({"x", "y"}, params, ParamValue::sym());
        Domain d = env.dom;
        Value x = env.at("x"), y = env.at("y");
        auto coeff = [d, x, y](int k, int n) {
            long j = (k % 2 != 0) ? (k + 1) / 2 : k / 2;
            Value acc = Value::zero(d);
            Value xp = Value::one(d);
            std::vector<Value> yp(n + 1, Value::one(d));
            for (int i = 1; i <= n; ++i) yp[i] = yp[i - 1] * y;
            for (int m = 0; m <= n; ++m) {
                Integer st = stirling_subset(n + j, m + j);
                Integer bi = (k % 2 != 0) ? binomial(m + j - 1, m) : binomial(m + j, m);
                if (st != 0 && bi != 0)
                    acc = acc + (xp * yp[n - m]).scaled(Rational(st * bi));
                xp = xp * x;
            }
            return acc;
        };
        auto alpha = [d, x, y](int k) {
            if (k % 2 != 0) return x;
            return y.scaled(Rational(k / 2));
        };
        return make_sfrac_family("bell", d, coeff, alpha);
    }
    if (name == "partial_theta") {
        reject_unknown_params(params, {});
        Domain d = q_polynomial_domain();
        auto coeff = [d](int k, int n) {
            long j = (k % 2 != 0) ? (k + 1) / 2 : k / 2;
            long top = (k % 2 != 0) ? n + j - 1 : n + j;
            if (top < n) return Value::zero(d);
            Value qb = qbinomial(top, n);
            long e = n * (n + 2 * j - 1) / 2;
            return qb * Value::of_mpoly(
                            d, MPoly::monomial(1, {static_cast<unsigned>(e)}, Rational(1)));
        };
        auto alpha = [d](int k) {
            if (k % 2 != 0) {
                long j = (k + 1) / 2;
                return Value::of_mpoly(
                    d, MPoly::monomial(1, {static_cast<unsigned>(2 * j - 2)}, Rational(1)));
            }
            long j = k / 2;
            MPoly t = MPoly::monomial(1, {static_cast<unsigned>(2 * j - 1)}, Rational(1)) -
                      MPoly::monomial(1, {static_cast<unsigned>(j - 1)}, Rational(1));
            return Value::of_mpoly(d, t);
        };
        return make_sfrac_family("partial_theta", d, coeff, alpha);
    }
    if (name == "rr" || name == "rr_a" || name == "rr_a_asym") {
        Domain qq = q_field_domain();
        Rational a(0);
        if (name != "rr") {
            a = require_numeric(params, "a", rat(1, 2));
            if (a == 1) throw BadParams("a = 1 makes the leading coefficient singular");
        } else {
            reject_unknown_params(params, {});
        }
        bool asym = (name == "rr_a_asym");
        auto coeff = [qq, a, asym](int k, int n) {
            UPoly den = qpoch(Rational(1), 1, n);
            if (a != 0) {
                // symmetric family: (a q^{k+1}; q)_n; asymmetric: (a q^k; q)_n
                // for k >= 0 with the k = -1 row using (a; q)_n.
                int shift = asym ? std::max(k, 0) : k + 1;
                den = den * qpoch(a, shift, n);
            }
            return q_power_over_poch(qq, n * (n + k), den);
        };
        auto alpha = [qq, a, asym, name](int k) {
            UPoly num = UPoly::monomial(k - 1, Rational(-1));
            UPoly den(Rational(1));
            if (a != 0) {
                if (asym && k == 1) {
                    den = qpoch(a, 0, 1); // 1 - a
                } else {
                    int lo = asym ? k - 2 : k - 1;
                    den = qpoch(a, lo, 1) * qpoch(a, lo + 1, 1);
                }
            }
            return Value::of_ratfun(qq, RatFun(num, den));
        };
        GkFamily f = make_sfrac_family(name, qq,
                                       [qq, coeff](int k, int n) { return coeff(k, n); }, alpha);
        return f;
    }
    throw UnknownFamily("no g_k family named '" + name + "'");
}

} // namespace cfrac
