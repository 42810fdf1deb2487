#ifndef CFRAC_UPOLY_HPP
#define CFRAC_UPOLY_HPP

#include <vector>

#include "cfrac/rational.hpp"

namespace cfrac {

// Dense univariate polynomial over Q, ascending powers.
// Invariant: the coefficient vector is trimmed (no trailing zeros); the zero
// polynomial is the empty vector.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Rational& constant);
    static UPoly variable();
    static UPoly monomial(int degree, const Rational& coef);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_value() const; // requires is_constant()

    const Rational& coeff(int i) const; // zero beyond the degree
    const Rational& leading() const;    // requires nonzero

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly scaled(const Rational& r) const;
    UPoly monic() const; // requires nonzero

    // Euclidean division: a = q*b + r with deg r < deg b. Throws DivisionByZero.
    static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    // Quotient of an exact division; throws NonExactDivision if b does not divide a.
    static UPoly divide_exact(const UPoly& a, const UPoly& b);
    // Monic gcd, computed with a primitive PRS over Z to contain coefficient growth.
    static UPoly gcd(const UPoly& a, const UPoly& b);

    Rational eval(const Rational& x) const;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace cfrac

#endif
