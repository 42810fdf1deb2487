#ifndef CFRAC_EXPAND_HPP
#define CFRAC_EXPAND_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cfrac/series.hpp"

namespace cfrac {

// Requested shape of the expansion: the degree bounds M_1, M_2, ... of the
// additive polynomials (the last listed value repeats forever), plus an
// optional list of required p_k (same tail rule). M ≡ 0 gives C-fractions,
// M ≡ 1 with required p ≡ 2 the classical associated form.
class ExpansionShape {
public:
    static ExpansionShape c_fraction();
    static ExpansionShape j_fraction(bool strict_p = false);
    static ExpansionShape custom(std::vector<int> m_list,
                                 std::vector<int> strict_p = {});

    int m_at(int k) const; // k >= 1
    std::optional<int> required_p_at(int k) const;

private:
    ExpansionShape(std::vector<int> m, std::vector<int> p);
    std::vector<int> m_, strict_p_;
};

// One level of the fraction: Delta_k as its M_k coefficients
// delta[0..M_k-1] = coefficient of t^1..t^{M_k}, the partial numerator
// alpha_k, and the power p_k >= len(delta)+1.
struct CFTerm {
    std::vector<Value> delta;
    Value alpha;
    int p = 1;
    bool operator==(const CFTerm& o) const {
        return delta == o.delta && alpha == o.alpha && p == o.p;
    }
};

// Expansion result. `terminated` means alpha_{m+1} = 0 was witnessed through
// the remaining order budget (a finite-order run cannot distinguish true
// termination from p_{m+1} > budget; `budget` records the witness).
// When not terminated, `budget` is the remaining order budget at the point the
// data ran out. `next_delta` holds the coefficients of Delta_{m+1} that the
// data did determine: all M_{m+1} of them under termination, the first
// min(M_{m+1}, budget) otherwise. They are needed to evaluate the fraction:
// the innermost tail is 1/(1 - Delta_{m+1} - ...).
struct CFraction {
    Domain domain;
    Value alpha0;
    std::vector<CFTerm> terms;
    bool terminated = false;
    int budget = 0;
    std::vector<Value> next_delta;

    int length() const { return static_cast<int>(terms.size()); }
    int sum_p() const;
    // Largest order cf_to_series can deliver; -1 means unbounded. For an
    // algorithm-built inconclusive fraction next_delta carries exactly
    // `budget` coefficients, so this equals sum_p + remaining budget.
    int determined_order() const {
        return terminated ? -1
                          : sum_p() + std::min<int>(budget,
                                                    static_cast<int>(next_delta.size()));
    }
    bool operator==(const CFraction& o) const;
    std::string status_string() const;
};

// The g-table of the refined algorithm: row k holds g_k through its budget
// N_k = N - sum_{i<=k} p_i, with g_{-1} kept at full order. The original
// input coefficients ride along so a run can later be extended.
struct GTable {
    Domain domain;
    std::vector<Value> input;                 // c_0..c_N of f
    std::vector<Value> g_minus1;              // through N
    bool g_minus1_is_one = true;
    std::vector<std::vector<Value>> rows;     // rows[k] = g_k, k = 0..K

    int order() const { return static_cast<int>(input.size()) - 1; }
    int levels() const { return static_cast<int>(rows.size()); }
    int row_budget(int k) const { return static_cast<int>(rows[k].size()) - 1; }
};

struct Expansion {
    CFraction cf;
    GTable table;
};

// Over an integral domain a run can discover mid-stream that the next g_k has
// coefficients outside the ring: the input has no expansion with coefficients
// there. The terms already found (including the level whose division failed;
// its delta, alpha and p are ring elements) stay correct over the fraction
// field and ride along in the error.
class PartialExpansionError : public NonExactDivision {
public:
    PartialExpansionError(const std::string& msg, CFraction partial_result)
        : NonExactDivision(msg), partial(std::move(partial_result)) {}
    CFraction partial;
};

// Size bookkeeping for the benchmark harness: peak rational bit size and peak
// polynomial degree seen among computed coefficients.
struct ExpandStats {
    size_t peak_bits = 0;
    int peak_degree = 0;
    void observe(const Value& v);
};

// Nonlinear form: iterates f_k = alpha_k^{-1} t^{-p_k} (1 - 1/f_{k-1} - Delta_k),
// one full truncated reciprocal per level.
CFraction expand_primitive(const Series& f, const ExpansionShape& shape,
                           ExpandStats* stats = nullptr);

// Linear form: g_k = alpha_k^{-1} t^{-p_k} (g_{k-1} - g_{k-2} - Delta_k g_{k-1}),
// with Delta read from one reciprocal of length M_k+1 per level. g_minus1
// defaults to the constant series 1 and must have constant term 1.
Expansion expand_refined(const Series& f, const ExpansionShape& shape,
                         const std::optional<Series>& g_minus1 = std::nullopt,
                         ExpandStats* stats = nullptr);

// Continue a previous run on a longer prefix of the same series. Equivalent to
// a fresh expand_refined at the new order; old table columns are reused.
Expansion extend(const Expansion& state, const ExpansionShape& shape,
                 const Series& f_extended);

// Bottom-up evaluation through t^order. For an inconclusive fraction, `order`
// may not exceed determined_order().
Series cf_to_series(const CFraction& cf, int order);

std::vector<Value> as_sfraction(const CFraction& cf); // throws ShapeMismatch

struct JFractionCoeffs {
    std::vector<Value> gammas; // gamma_0, gamma_1, ...
    std::vector<Value> betas;  // beta_1, beta_2, ...
};
JFractionCoeffs as_jfraction(const CFraction& cf);    // throws ShapeMismatch

// gamma_0 = alpha_1, gamma_n = alpha_{2n} + alpha_{2n+1}, beta_n = alpha_{2n-1} alpha_{2n};
// emits every coefficient the input determines.
JFractionCoeffs contract_s_to_j(const std::vector<Value>& alphas);

// Build the series of an S- or J-fraction with the given coefficient prefix
// (enough levels are used for the tail not to matter through t^order).
Series sfraction_series(const Domain& d, const std::vector<Value>& alphas, int order);
Series jfraction_series(const Domain& d, const std::vector<Value>& gammas,
                        const std::vector<Value>& betas, int order);

// Exact symmetric L D L^T elimination of the Hankel matrix (a_{i+j}) of size
// (m+1)x(m+1) from a_0..a_{2m}; returns d0 = a_0, beta_k = d_k/d_{k-1} and
// gamma_k = L_{k+1,k} - L_{k,k-1}. A vanishing pivot means no classical
// J-fraction of this depth exists.
struct HankelJFraction {
    Value d0;
    std::vector<Value> gammas; // gamma_0..gamma_{m-1}
    std::vector<Value> betas;  // beta_1..beta_m
};
HankelJFraction jfraction_from_hankel(const std::vector<Value>& a);

// Checks g_k - g_{k-1} = Delta_{k+1} g_k + A_{k+1} g_{k+1} exactly through
// t^order for 0 <= k <= K-1, where K = gs.size()-2 (gs runs k = -1..K).
// deltas[i] and as[i] are Delta_{i+1} and A_{i+1}; both need zero constant
// terms, every g needs constant term 1.
struct RecurrenceReport {
    bool ok = true;
    int k = -1, n = -1;
    std::string lhs, rhs;
    std::string to_string() const;
};
RecurrenceReport euler_gauss_verify(const std::vector<Series>& gs,
                                    const std::vector<Series>& deltas,
                                    const std::vector<Series>& as, int order);

// Scans the C-fraction coefficients of a rational sequence for the first
// strictly negative one. Hitting some p_k > 1 raises PEncountered.
struct ScanResult {
    enum class Kind { FoundNegative, Terminated, BudgetExhausted };
    Kind kind;
    int index = 0; // index of the first negative alpha, or last index scanned
};
ScanResult stieltjes_positivity_scan(const std::vector<Rational>& a);

} // namespace cfrac

#endif
