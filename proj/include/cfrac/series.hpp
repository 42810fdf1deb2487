#ifndef CFRAC_SERIES_HPP
#define CFRAC_SERIES_HPP

#include <vector>

#include "cfrac/value.hpp"

namespace cfrac {

// Formal power series known exactly through t^order and unknown beyond.
// Every operation propagates the order by the pessimistic min rule.
class Series {
public:
    Series(Domain d, std::vector<Value> coeffs);
    static Series zero(const Domain& d, int order);
    static Series one(const Domain& d, int order);
    static Series from_rationals(const Domain& d, const std::vector<Rational>& coeffs);

    const Domain& domain() const { return dom_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Value& coeff(int n) const;
    const std::vector<Value>& coeffs() const { return c_; }

    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    friend Series operator*(const Series& f, const Series& g); // Cauchy product
    bool operator==(const Series& o) const { return dom_ == o.dom_ && c_ == o.c_; }

    // g with f*g = 1 through order(); needs an invertible constant term, and
    // constant term exactly 1 over a polynomial ring.
    Series reciprocal() const;
    // Divide by t^p; the low p coefficients must vanish and p <= order.
    Series shifted_down(int p) const;
    Series log1() const; // requires c0 = 1
    Series exp0() const; // requires c0 = 0

    Series scaled(const Value& c) const;           // coefficientwise multiply
    Series scaled_rational(const Rational& r) const;
    Series truncated(int new_order) const;         // new_order <= order

    bool is_one_through_order() const;
    bool agrees_with(const Series& o, int through_order) const;

private:
    Domain dom_;
    std::vector<Value> c_;
};

} // namespace cfrac

#endif
