#ifndef CFRAC_VALUE_HPP
#define CFRAC_VALUE_HPP

#include <string_view>
#include <variant>

#include "cfrac/domain.hpp"
#include "cfrac/mpoly.hpp"
#include "cfrac/ratfun.hpp"

namespace cfrac {

// An exact element of a coefficient domain. Values are immutable once built
// and always kept in the canonical form of their payload type, so equality is
// representational.
class Value {
public:
    Value() : dom_(Domain::rationals()), payload_(Rational(0)) {}

    static Value zero(const Domain& d);
    static Value one(const Domain& d);
    static Value of_rational(const Domain& d, const Rational& r);
    static Value variable(const Domain& d, const std::string& name);
    static Value of_upoly(const Domain& d, const UPoly& p);    // RationalFunctions domain
    static Value of_ratfun(const Domain& d, RatFun f);
    static Value of_mpoly(const Domain& d, MPoly p);           // Polynomials domain

    const Domain& domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;
    // Units: any nonzero element of a field; nonzero rational constants in Q[x...].
    bool is_unit() const;
    bool is_rational_constant() const;
    Rational rational_constant() const;
    int sign() const; // Rationals domain only

    friend Value operator+(const Value& a, const Value& b);
    friend Value operator-(const Value& a, const Value& b);
    friend Value operator*(const Value& a, const Value& b);
    Value operator-() const;
    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }

    Value inverse() const;                                // throws NotInvertible
    static Value exact_div(const Value& x, const Value& y);
    Value scaled(const Rational& r) const;                // multiplication by Q

    const Rational& as_rational() const;
    const RatFun& as_ratfun() const;
    const MPoly& as_mpoly() const;

    std::string to_string() const;
    static Value parse(const Domain& d, std::string_view text);

private:
    Value(Domain d, std::variant<Rational, RatFun, MPoly> p)
        : dom_(std::move(d)), payload_(std::move(p)) {}
    Domain dom_;
    std::variant<Rational, RatFun, MPoly> payload_;
};

void check_same_domain(const Value& a, const Value& b);

} // namespace cfrac

#endif
