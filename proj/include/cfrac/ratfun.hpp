#ifndef CFRAC_RATFUN_HPP
#define CFRAC_RATFUN_HPP

#include "cfrac/upoly.hpp"

namespace cfrac {

// Univariate rational function over Q in canonical form: numerator and
// denominator coprime, denominator monic, zero represented as 0/1.
class RatFun {
public:
    RatFun() : den_(Rational(1)) {}
    explicit RatFun(const Rational& r) : num_(r), den_(Rational(1)) {}
    explicit RatFun(UPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFun(UPoly num, UPoly den); // normalizes; throws DivisionByZero

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const { return num_.constant_value(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inverse() const; // throws DivisionByZero
    RatFun scaled(const Rational& r) const;

    std::string to_string(const std::string& var) const;

private:
    void normalize();
    UPoly num_, den_;
};

} // namespace cfrac

#endif
