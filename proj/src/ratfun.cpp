#include "cfrac/ratfun.hpp"

namespace cfrac {

RatFun::RatFun(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        UPoly g = UPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = UPoly::divide_exact(num_, g);
            den_ = UPoly::divide_exact(den_, g);
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    RatFun r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    RatFun r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ - b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    // Cross-reduce before multiplying; the product is then already coprime.
    UPoly g1 = UPoly::gcd(a.num_, b.den_);
    UPoly g2 = UPoly::gcd(b.num_, a.den_);
    UPoly n1 = g1.is_one() ? a.num_ : UPoly::divide_exact(a.num_, g1);
    UPoly d2 = g1.is_one() ? b.den_ : UPoly::divide_exact(b.den_, g1);
    UPoly n2 = g2.is_one() ? b.num_ : UPoly::divide_exact(b.num_, g2);
    UPoly d1 = g2.is_one() ? a.den_ : UPoly::divide_exact(a.den_, g2);
    RatFun r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    Rational lc = r.den_.leading();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lc = r.den_.leading();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

RatFun RatFun::scaled(const Rational& s) const {
    if (s == 0) return RatFun();
    RatFun r;
    r.num_ = num_.scaled(s);
    r.den_ = den_;
    return r;
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace cfrac
