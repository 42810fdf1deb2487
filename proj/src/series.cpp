#include "cfrac/series.hpp"

#include <algorithm>

namespace cfrac {

Series::Series(Domain d, std::vector<Value> coeffs) : dom_(std::move(d)), c_(std::move(coeffs)) {
    if (c_.empty()) throw OrderUnderflow("a truncated series needs at least its constant term");
    for (const auto& v : c_)
        if (v.domain() != dom_) throw DomainMismatch("series coefficient in the wrong domain");
}

Series Series::zero(const Domain& d, int order) {
    if (order < 0) throw OrderUnderflow("negative series order");
    return Series(d, std::vector<Value>(order + 1, Value::zero(d)));
}

Series Series::one(const Domain& d, int order) {
    Series s = zero(d, order);
    s.c_[0] = Value::one(d);
    return s;
}

Series Series::from_rationals(const Domain& d, const std::vector<Rational>& coeffs) {
    std::vector<Value> v;
    v.reserve(coeffs.size());
    for (const auto& r : coeffs) v.push_back(Value::of_rational(d, r));
    return Series(d, std::move(v));
}

const Value& Series::coeff(int n) const {
    if (n < 0 || n > order()) throw IndexOutOfRange("series coefficient index out of range");
    return c_[n];
}

Series operator+(const Series& f, const Series& g) {
    if (f.dom_ != g.dom_) throw DomainMismatch("series domains differ");
    int n = std::min(f.order(), g.order());
    std::vector<Value> c;
    c.reserve(n + 1);
    for (int i = 0; i <= n; ++i) c.push_back(f.c_[i] + g.c_[i]);
    return Series(f.dom_, std::move(c));
}

Series operator-(const Series& f, const Series& g) {
    if (f.dom_ != g.dom_) throw DomainMismatch("series domains differ");
    int n = std::min(f.order(), g.order());
    std::vector<Value> c;
    c.reserve(n + 1);
    for (int i = 0; i <= n; ++i) c.push_back(f.c_[i] - g.c_[i]);
    return Series(f.dom_, std::move(c));
}

Series operator*(const Series& f, const Series& g) {
    if (f.dom_ != g.dom_) throw DomainMismatch("series domains differ");
    int n = std::min(f.order(), g.order());
    std::vector<Value> c(n + 1, Value::zero(f.dom_));
    for (int i = 0; i <= n; ++i) {
        if (f.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.c_[j].is_zero()) continue;
            c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
        }
    }
    return Series(f.dom_, std::move(c));
}

Series Series::reciprocal() const {
    const Value& c0 = c_[0];
    if (!c0.is_unit() || (dom_.kind() == DomainKind::Polynomials && !c0.is_one()))
        throw NonUnitConstantTerm("series constant term is not invertible here: " +
                                  c0.to_string() + " in " + dom_.description());
    Value inv0 = c0.inverse();
    int n = order();
    std::vector<Value> g(n + 1, Value::zero(dom_));
    g[0] = inv0;
    for (int m = 1; m <= n; ++m) {
        Value acc = Value::zero(dom_);
        for (int i = 1; i <= m; ++i) {
            if (c_[i].is_zero() || g[m - i].is_zero()) continue;
            acc = acc + c_[i] * g[m - i];
        }
        g[m] = -(inv0 * acc);
    }
    return Series(dom_, std::move(g));
}

Series Series::shifted_down(int p) const {
    if (p <= 0) throw IndexOutOfRange("shift amount must be positive");
    if (p > order()) throw OrderUnderflow("shift exceeds the series order");
    for (int i = 0; i < p; ++i)
        if (!c_[i].is_zero())
            throw NonzeroLowCoefficients("coefficient of t^" + std::to_string(i) +
                                         " is nonzero");
    std::vector<Value> c(c_.begin() + p, c_.end());
    return Series(dom_, std::move(c));
}

Series Series::log1() const {
    if (!c_[0].is_one())
        throw ConstantTermViolation("log needs constant term 1, got " + c_[0].to_string());
    // l' = f'/f, integrated with rational scalings 1/n.
    int n = order();
    Series recip = reciprocal();
    std::vector<Value> l(n + 1, Value::zero(dom_));
    for (int m = 1; m <= n; ++m) {
        // [t^{m-1}] f' * (1/f) = sum_{i=1..m} i*c_i * recip_{m-i}
        Value acc = Value::zero(dom_);
        for (int i = 1; i <= m; ++i) {
            if (c_[i].is_zero()) continue;
            acc = acc + c_[i].scaled(Rational(i)) * recip.c_[m - i];
        }
        l[m] = acc.scaled(rat(1, m));
    }
    return Series(dom_, std::move(l));
}

Series Series::exp0() const {
    if (!c_[0].is_zero())
        throw ConstantTermViolation("exp needs constant term 0, got " + c_[0].to_string());
    int n = order();
    std::vector<Value> e(n + 1, Value::zero(dom_));
    e[0] = Value::one(dom_);
    for (int m = 1; m <= n; ++m) {
        // m*e_m = sum_{i=1..m} i*c_i*e_{m-i}
        Value acc = Value::zero(dom_);
        for (int i = 1; i <= m; ++i) {
            if (c_[i].is_zero() || e[m - i].is_zero()) continue;
            acc = acc + c_[i].scaled(Rational(i)) * e[m - i];
        }
        e[m] = acc.scaled(rat(1, m));
    }
    return Series(dom_, std::move(e));
}

Series Series::scaled(const Value& s) const {
    std::vector<Value> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * s);
    return Series(dom_, std::move(c));
}

Series Series::scaled_rational(const Rational& r) const {
    std::vector<Value> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v.scaled(r));
    return Series(dom_, std::move(c));
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw OrderUnderflow("cannot truncate to order " + std::to_string(new_order));
    return Series(dom_, std::vector<Value>(c_.begin(), c_.begin() + new_order + 1));
}

bool Series::is_one_through_order() const {
    if (!c_[0].is_one()) return false;
    for (int i = 1; i <= order(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Series::agrees_with(const Series& o, int through_order) const {
    if (through_order > order() || through_order > o.order())
        throw OrderUnderflow("comparison order exceeds a series order");
    for (int i = 0; i <= through_order; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

} // namespace cfrac
