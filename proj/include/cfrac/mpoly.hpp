#ifndef CFRAC_MPOLY_HPP
#define CFRAC_MPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfrac/rational.hpp"

namespace cfrac {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms are kept sorted in descending lexicographic order of the exponent
// tuples (variable 0 most significant); zero coefficients are never stored.
// The canonical form is therefore unique.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);
    static MPoly monomial(int nvars, Exponents e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    size_t term_count() const { return terms_.size(); }
    const std::pair<Exponents, Rational>& term(size_t i) const { return terms_[i]; }
    int total_degree() const;
    Rational coeff(const Exponents& e) const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly scaled(const Rational& r) const;

    // Unique q with q*b == a, when it exists; throws NonExactDivision otherwise.
    static MPoly divide_exact(const MPoly& a, const MPoly& b);

    // Substitute rationals for the given variables; substituted variables keep
    // exponent zero in the result.
    MPoly eval_partial(const std::vector<std::optional<Rational>>& vals) const;
    // Drop variables whose exponents are zero everywhere, keeping `keep`.
    MPoly project(const std::vector<int>& keep, int new_nvars) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    static bool lex_less(const Exponents& a, const Exponents& b);
    static MPoly merge(const MPoly& a, const MPoly& b, int sign);
    void insert_term(const Exponents& e, const Rational& c); // accumulate, keep order
    int nvars_;
    std::vector<std::pair<Exponents, Rational>> terms_;
};

} // namespace cfrac

#endif
