#ifndef CFRAC_TESTS_HELPERS_HPP
#define CFRAC_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "cfrac/series.hpp"

namespace cfrac::testing {

inline Value qv(const Domain& d, long num, long den = 1) {
    return Value::of_rational(d, rat(num, den));
}

inline Series series_of(const Domain& d, const std::vector<long>& c) {
    std::vector<Value> v;
    v.reserve(c.size());
    for (long x : c) v.push_back(qv(d, x));
    return Series(d, std::move(v));
}

// Small random rationals with nonzero option for leading coefficients.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Rational rational(int max_abs = 9, int max_den = 9) {
        std::uniform_int_distribution<int> num(-max_abs, max_abs);
        std::uniform_int_distribution<int> den(1, max_den);
        return rat(num(gen_), den(gen_));
    }
    Rational nonzero_rational(int max_abs = 9, int max_den = 9) {
        while (true) {
            Rational r = rational(max_abs, max_den);
            if (r != 0) return r;
        }
    }
    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }
    Series rational_series(const Domain& d, int order, bool unit_constant) {
        std::vector<Value> c;
        c.push_back(Value::of_rational(d, unit_constant ? nonzero_rational() : rational()));
        for (int i = 1; i <= order; ++i) c.push_back(Value::of_rational(d, rational()));
        return Series(d, std::move(c));
    }

private:
    std::mt19937 gen_;
};

} // namespace cfrac::testing

#endif
