#ifndef CFRAC_CATALOG_HPP
#define CFRAC_CATALOG_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cfrac/series.hpp"

namespace cfrac {

// A family parameter: either an exact rational or "symbolic". Symbolic
// parameters promote the family's domain to the matching polynomial ring.
struct ParamValue {
    bool symbolic = false;
    Rational value = Rational(0);

    static ParamValue sym() { return ParamValue{true, Rational(0)}; }
    static ParamValue num(const Rational& r) { return ParamValue{false, r}; }
};

// Declarative description of an input series: a named family with parameters
// and an order budget.
struct SeriesSpec {
    std::string family;
    std::map<std::string, ParamValue> params;
    int order = 0;
};

// Exact coefficients through t^order. Families: factorial, rising_factorial(a),
// odd_double_factorial, bell(x,y), f20_ratio(a,b), tan_ratio, partial_theta,
// rr_ratio, rr_a_ratio(a), secant_power(x), moment_probe(eps).
Series generate(const SeriesSpec& spec);

struct FamilyInfo {
    std::string name;
    std::vector<std::string> params;
    std::string domain_note;
    std::string pattern_note;
};
const std::vector<FamilyInfo>& list_families();

// A closed-form g_k family together with the Delta_k and A_k data that make it
// pass the three-term recurrence check, and the documented alpha_k pattern.
struct GkFamily {
    std::string name;
    Domain domain;
    std::function<Series(int k, int order)> g;     // k >= -1
    std::function<Series(int k, int order)> delta; // Delta_k, k >= 1
    std::function<Series(int k, int order)> a;     // A_k, k >= 1
    std::function<Value(int k)> alpha;             // documented closed form, k >= 1
};

// Families: factorial, rising_factorial(a), f20(a,b), bell(x,y), partial_theta,
// rr, rr_a(a numeric), rr_a_asym(a numeric).
GkFamily gk_family(const std::string& name,
                   const std::map<std::string, ParamValue>& params = {});
std::vector<std::string> gk_family_names();

Domain q_polynomial_domain(); // Q[q]
Domain q_field_domain();      // Q(q)

// The polynomial q-binomial in Q[q], computed by one q-Pascal recurrence and
// cross-checked against the dual one.
Value qbinomial(int n, int k);

// Stirling subset numbers {n over k} by the standard recurrence.
Integer stirling_subset(int n, int k);

// P_n(a,b) = sum over permutations of a^{#records} b^{#exclusive antirecords},
// by exhaustive enumeration (record = strict left-to-right maximum, antirecord
// = strict right-to-left minimum, exclusive = not also a record). n <= 8.
Value dumont_kreweras_oracle(int n);
Domain dumont_kreweras_domain(); // Q[a,b]

} // namespace cfrac

#endif
