#include "cfrac/expand.hpp"

#include <algorithm>
#include <sstream>

namespace cfrac {

// ---------------------------------------------------------------------------
// ExpansionShape

ExpansionShape::ExpansionShape(std::vector<int> m, std::vector<int> p)
    : m_(std::move(m)), strict_p_(std::move(p)) {
    if (m_.empty()) throw BadParams("shape needs at least one M value");
    for (int v : m_)
        if (v < 0) throw BadParams("M values must be nonnegative");
    for (size_t i = 0; i < strict_p_.size(); ++i) {
        int mk = i < m_.size() ? m_[i] : m_.back();
        if (strict_p_[i] < mk + 1)
            throw BadParams("required p_k must be at least M_k + 1");
    }
}

ExpansionShape ExpansionShape::c_fraction() { return ExpansionShape({0}, {}); }

ExpansionShape ExpansionShape::j_fraction(bool strict_p) {
    return ExpansionShape({1}, strict_p ? std::vector<int>{2} : std::vector<int>{});
}

ExpansionShape ExpansionShape::custom(std::vector<int> m_list, std::vector<int> strict_p) {
    return ExpansionShape(std::move(m_list), std::move(strict_p));
}

int ExpansionShape::m_at(int k) const {
    if (k < 1) throw IndexOutOfRange("shape index starts at 1");
    size_t i = static_cast<size_t>(k - 1);
    return i < m_.size() ? m_[i] : m_.back();
}

std::optional<int> ExpansionShape::required_p_at(int k) const {
    if (strict_p_.empty()) return std::nullopt;
    size_t i = static_cast<size_t>(k - 1);
    return i < strict_p_.size() ? strict_p_[i] : strict_p_.back();
}

// ---------------------------------------------------------------------------
// CFraction

int CFraction::sum_p() const {
    int s = 0;
    for (const auto& t : terms) s += t.p;
    return s;
}

bool CFraction::operator==(const CFraction& o) const {
    return domain == o.domain && alpha0 == o.alpha0 && terms == o.terms &&
           terminated == o.terminated && budget == o.budget && next_delta == o.next_delta;
}

std::string CFraction::status_string() const {
    std::ostringstream s;
    if (terminated)
        s << "Terminated(" << length() << ") witnessed through budget " << budget;
    else
        s << "Inconclusive(remaining budget " << budget << ")";
    return s.str();
}

void ExpandStats::observe(const Value& v) {
    switch (v.domain().kind()) {
        case DomainKind::Rationals:
            peak_bits = std::max(peak_bits, bit_size(v.as_rational()));
            break;
        case DomainKind::RationalFunctions:
            peak_degree = std::max({peak_degree, v.as_ratfun().num().degree(),
                                    v.as_ratfun().den().degree()});
            break;
        case DomainKind::Polynomials:
            peak_degree = std::max(peak_degree, v.as_mpoly().total_degree());
            break;
    }
}

// ---------------------------------------------------------------------------
// Shared pieces of the two algorithms

namespace {

// Reciprocal of the prefix c[0..m]; c[0] must be 1 (which both algorithms
// guarantee for every series they invert, in any domain).
std::vector<Value> recip_prefix(const Domain& dom, const std::vector<Value>& c, int m) {
    if (!c[0].is_one())
        throw NonUnitConstantTerm("internal series lost its unit constant term");
    std::vector<Value> g(m + 1, Value::zero(dom));
    g[0] = Value::one(dom);
    for (int n = 1; n <= m; ++n) {
        Value acc = Value::zero(dom);
        for (int i = 1; i <= n; ++i) {
            if (c[i].is_zero() || g[n - i].is_zero()) continue;
            acc = acc + c[i] * g[n - i];
        }
        g[n] = -acc;
    }
    return g;
}

// Delta_k through order m, read from 1 - g_{k-2}/g_{k-1} with one truncated
// reciprocal of length m+1. Returns delta[j-1] = coefficient of t^j.
std::vector<Value> delta_prefix(const Domain& dom, const std::vector<Value>& prev2,
                                const std::vector<Value>& prev, int m) {
    if (m == 0) return {};
    std::vector<Value> rec = recip_prefix(dom, prev, m);
    std::vector<Value> delta;
    delta.reserve(m);
    for (int j = 1; j <= m; ++j) {
        Value acc = Value::zero(dom);
        for (int i = 0; i <= j; ++i) {
            if (prev2[i].is_zero() || rec[j - i].is_zero()) continue;
            acc = acc + prev2[i] * rec[j - i];
        }
        delta.push_back(-acc);
    }
    return delta;
}

struct StepResult {
    // RingFailure: delta/alpha/p were determined but the new row left the ring.
    enum class Kind { NewTerm, Terminated, OutOfData, RingFailure } kind;
    std::vector<Value> delta;
    Value alpha;
    int p = 0;
    std::vector<Value> row; // g_k (or f_k) coefficients for NewTerm
};

Value divide_by_alpha(const Value& x, const Value& alpha, const Value* alpha_inv) {
    return alpha_inv ? x * *alpha_inv : Value::exact_div(x, alpha);
}

// One level of the refined algorithm: residual r = g_{k-1} - g_{k-2} - Delta_k g_{k-1}.
StepResult step_refined(const Domain& dom, const std::vector<Value>& prev2,
                        const std::vector<Value>& prev, int m_k) {
    int np = static_cast<int>(prev.size()) - 1; // N_{k-1}
    StepResult out{StepResult::Kind::OutOfData, {}, Value::zero(dom), 0, {}};
    if (np < m_k + 1) {
        out.delta = delta_prefix(dom, prev2, prev, np);
        return out;
    }
    out.delta = delta_prefix(dom, prev2, prev, m_k);
    auto residual = [&](int n) {
        Value r = prev[n] - prev2[n];
        for (int j = 1; j <= m_k && j < n; ++j) {
            if (out.delta[j - 1].is_zero() || prev[n - j].is_zero()) continue;
            r = r - out.delta[j - 1] * prev[n - j];
        }
        // j == n term touches prev[0] = 1
        if (n >= 1 && n <= m_k) r = r - out.delta[n - 1];
        return r;
    };
    int p = -1;
    Value alpha = Value::zero(dom);
    for (int n = m_k + 1; n <= np; ++n) {
        Value r = residual(n);
        if (!r.is_zero()) {
            p = n;
            alpha = r;
            break;
        }
    }
    if (p < 0) {
        out.kind = StepResult::Kind::Terminated;
        return out;
    }
    out.kind = StepResult::Kind::NewTerm;
    out.alpha = alpha;
    out.p = p;
    std::optional<Value> inv;
    if (dom.is_field()) inv = alpha.inverse();
    out.row.reserve(np - p + 1);
    out.row.push_back(Value::one(dom));
    try {
        for (int n = 1; n <= np - p; ++n)
            out.row.push_back(divide_by_alpha(residual(n + p), alpha, inv ? &*inv : nullptr));
    } catch (const NonExactDivision&) {
        out.kind = StepResult::Kind::RingFailure;
        out.row.clear();
    }
    return out;
}

// One level of the primitive algorithm: u = 1 - 1/f_{k-1}, a full reciprocal.
StepResult step_primitive(const Domain& dom, const std::vector<Value>& fprev, int m_k) {
    int np = static_cast<int>(fprev.size()) - 1;
    std::vector<Value> rec = recip_prefix(dom, fprev, np);
    auto u = [&](int n) { return -rec[n]; }; // n >= 1
    StepResult out{StepResult::Kind::OutOfData, {}, Value::zero(dom), 0, {}};
    int dlen = std::min(m_k, np);
    out.delta.reserve(dlen);
    for (int j = 1; j <= dlen; ++j) out.delta.push_back(u(j));
    if (np < m_k + 1) return out;
    int p = -1;
    for (int n = m_k + 1; n <= np; ++n) {
        if (!rec[n].is_zero()) {
            p = n;
            break;
        }
    }
    if (p < 0) {
        out.kind = StepResult::Kind::Terminated;
        return out;
    }
    out.kind = StepResult::Kind::NewTerm;
    out.alpha = u(p);
    out.p = p;
    std::optional<Value> inv;
    if (dom.is_field()) inv = out.alpha.inverse();
    out.row.reserve(np - p + 1);
    try {
        for (int n = 0; n <= np - p; ++n)
            out.row.push_back(divide_by_alpha(u(n + p), out.alpha, inv ? &*inv : nullptr));
    } catch (const NonExactDivision&) {
        out.kind = StepResult::Kind::RingFailure;
        out.row.clear();
    }
    return out;
}

void check_strict_p(const ExpansionShape& shape, int k, int p) {
    if (auto req = shape.required_p_at(k); req && *req != p) {
        std::ostringstream msg;
        msg << "level " << k << " produced p = " << p << " but the shape requires p = "
            << *req;
        throw StrictShapeViolation(msg.str());
    }
}

void observe_row(ExpandStats* stats, const std::vector<Value>& row) {
    if (!stats) return;
    for (const auto& v : row) stats->observe(v);
}

// Drives the refined loop from level terms.size()+1 until the data runs out
// or a zero alpha is witnessed.
void run_refined(CFraction& cf, GTable& table, const ExpansionShape& shape,
                 ExpandStats* stats) {
    const Domain& dom = cf.domain;
    for (int k = static_cast<int>(cf.terms.size()) + 1;; ++k) {
        const std::vector<Value>& prev2 = (k >= 2) ? table.rows[k - 2] : table.g_minus1;
        const std::vector<Value>& prev = table.rows[k - 1];
        StepResult st = step_refined(dom, prev2, prev, shape.m_at(k));
        int np = static_cast<int>(prev.size()) - 1;
        if (st.kind == StepResult::Kind::OutOfData) {
            cf.terminated = false;
            cf.budget = np;
            cf.next_delta = std::move(st.delta);
            return;
        }
        if (st.kind == StepResult::Kind::Terminated) {
            cf.terminated = true;
            cf.budget = np;
            cf.next_delta = std::move(st.delta);
            return;
        }
        check_strict_p(shape, k, st.p);
        if (st.kind == StepResult::Kind::RingFailure) {
            cf.terminated = false;
            cf.budget = np - st.p;
            cf.next_delta.clear();
            cf.terms.push_back({std::move(st.delta), std::move(st.alpha), st.p});
            throw PartialExpansionError(
                "g_" + std::to_string(k) + " has coefficients outside " +
                    dom.description() + "; the input has no expansion with coefficients "
                    "in the ring (terms found so far are attached, correct over the "
                    "fraction field)",
                cf);
        }
        observe_row(stats, st.row);
        cf.terms.push_back({std::move(st.delta), std::move(st.alpha), st.p});
        table.rows.push_back(std::move(st.row));
    }
}

} // namespace

// ---------------------------------------------------------------------------

CFraction expand_primitive(const Series& f, const ExpansionShape& shape, ExpandStats* stats) {
    const Domain& dom = f.domain();
    const Value& c0 = f.coeff(0);
    if (c0.is_zero() || !c0.is_unit())
        throw NonUnitConstantTerm("constant term " + c0.to_string() +
                                  " is not invertible in " + dom.description());
    CFraction cf{dom, c0, {}, false, 0, {}};
    std::vector<Value> cur = f.scaled(c0.inverse()).coeffs();
    observe_row(stats, cur);
    for (int k = 1;; ++k) {
        StepResult st = step_primitive(dom, cur, shape.m_at(k));
        int np = static_cast<int>(cur.size()) - 1;
        if (st.kind == StepResult::Kind::OutOfData) {
            cf.terminated = false;
            cf.budget = np;
            cf.next_delta = std::move(st.delta);
            return cf;
        }
        if (st.kind == StepResult::Kind::Terminated) {
            cf.terminated = true;
            cf.budget = np;
            cf.next_delta = std::move(st.delta);
            return cf;
        }
        check_strict_p(shape, k, st.p);
        if (st.kind == StepResult::Kind::RingFailure) {
            cf.terminated = false;
            cf.budget = np - st.p;
            cf.next_delta.clear();
            cf.terms.push_back({std::move(st.delta), std::move(st.alpha), st.p});
            throw PartialExpansionError(
                "f_" + std::to_string(k) + " has coefficients outside " +
                    dom.description() + "; the input has no expansion with coefficients "
                    "in the ring (terms found so far are attached, correct over the "
                    "fraction field)",
                cf);
        }
        observe_row(stats, st.row);
        cf.terms.push_back({std::move(st.delta), std::move(st.alpha), st.p});
        cur = std::move(st.row);
    }
}

Expansion expand_refined(const Series& f, const ExpansionShape& shape,
                         const std::optional<Series>& g_minus1, ExpandStats* stats) {
    const Domain& dom = f.domain();
    const Value& c0 = f.coeff(0);
    if (c0.is_zero() || !c0.is_unit())
        throw NonUnitConstantTerm("constant term " + c0.to_string() +
                                  " is not invertible in " + dom.description());
    int n = f.order();

    GTable table;
    table.domain = dom;
    table.input = f.coeffs();
    if (g_minus1) {
        if (g_minus1->domain() != dom) throw DomainMismatch("g_minus1 domain differs");
        if (!g_minus1->coeff(0).is_one())
            throw BadGMinus1("g_minus1 must have constant term 1");
        if (g_minus1->order() < n)
            throw BadGMinus1("g_minus1 must be known at least through the input order");
        table.g_minus1 = g_minus1->coeffs();
        table.g_minus1_is_one = g_minus1->is_one_through_order();
    } else {
        table.g_minus1 = Series::one(dom, n).coeffs();
        table.g_minus1_is_one = true;
    }

    // g_0 = alpha0^{-1} * g_{-1} * f through N
    Value inv0 = c0.inverse();
    Series g0 = (Series(dom, table.g_minus1).truncated(n) * f).scaled(inv0);
    table.rows.push_back(g0.coeffs());
    observe_row(stats, table.rows[0]);

    CFraction cf{dom, c0, {}, false, 0, {}};
    run_refined(cf, table, shape, stats);
    return Expansion{std::move(cf), std::move(table)};
}

Expansion extend(const Expansion& state, const ExpansionShape& shape, const Series& f_extended) {
    const Domain& dom = state.table.domain;
    if (f_extended.domain() != dom) throw DomainMismatch("extension domain differs");
    int n_old = state.table.order();
    int n_new = f_extended.order();
    if (n_new < n_old)
        throw InconsistentExtension("extension is shorter than the original input");
    for (int i = 0; i <= n_old; ++i)
        if (f_extended.coeff(i) != state.table.input[i])
            throw InconsistentExtension("extension disagrees with the original coefficient of t^" +
                                        std::to_string(i));

    Expansion out;
    out.table.domain = dom;
    out.table.input = f_extended.coeffs();
    out.table.g_minus1_is_one = state.table.g_minus1_is_one;
    if (state.table.g_minus1_is_one) {
        out.table.g_minus1 = Series::one(dom, n_new).coeffs();
    } else {
        if (static_cast<int>(state.table.g_minus1.size()) - 1 < n_new)
            throw BadGMinus1("stored g_minus1 is too short for the requested extension");
        out.table.g_minus1 = state.table.g_minus1;
    }

    // Rebuild g_0 columns: g_0 = alpha0^{-1} g_{-1} f. Old columns are reused.
    const CFraction& old_cf = state.cf;
    Value inv0 = old_cf.alpha0.inverse();
    std::vector<Value> g0 = state.table.rows[0];
    g0.reserve(n_new + 1);
    for (int m = n_old + 1; m <= n_new; ++m) {
        Value acc = Value::zero(dom);
        for (int i = 0; i <= m; ++i) {
            if (out.table.g_minus1[i].is_zero() || f_extended.coeff(m - i).is_zero()) continue;
            acc = acc + out.table.g_minus1[i] * f_extended.coeff(m - i);
        }
        g0.push_back(acc * inv0);
    }
    out.table.rows.push_back(std::move(g0));

    // Append the new columns of every existing row, reusing the stored terms:
    // g_k[n] = alpha_k^{-1} (g_{k-1}[n+p] - g_{k-2}[n+p] - sum_j delta_j g_{k-1}[n+p-j]).
    for (size_t t = 0; t < old_cf.terms.size(); ++t) {
        const CFTerm& term = old_cf.terms[t];
        const std::vector<Value>& prev2 = (t >= 1) ? out.table.rows[t - 1] : out.table.g_minus1;
        const std::vector<Value>& prev = out.table.rows[t];
        std::vector<Value> row = state.table.rows[t + 1];
        int np_new = static_cast<int>(prev.size()) - 1;
        int budget_new = np_new - term.p;
        std::optional<Value> inv;
        if (dom.is_field()) inv = term.alpha.inverse();
        for (int n = static_cast<int>(row.size()); n <= budget_new; ++n) {
            int idx = n + term.p;
            Value r = prev[idx] - prev2[idx];
            for (size_t j = 1; j <= term.delta.size(); ++j) {
                if (term.delta[j - 1].is_zero()) continue;
                r = r - term.delta[j - 1] * prev[idx - static_cast<int>(j)];
            }
            row.push_back(divide_by_alpha(r, term.alpha, inv ? &*inv : nullptr));
        }
        out.table.rows.push_back(std::move(row));
    }

    out.cf = CFraction{dom, old_cf.alpha0, old_cf.terms, false, 0, {}};
    run_refined(out.cf, out.table, shape, nullptr);
    return out;
}

Series cf_to_series(const CFraction& cf, int order) {
    if (order < 0) throw OrderUnderflow("negative evaluation order");
    if (!cf.terminated && order > cf.determined_order())
        throw InsufficientDepth("the stored terms determine the series only through t^" +
                                std::to_string(cf.determined_order()));
    const Domain& dom = cf.domain;
    Series fk = Series::one(dom, order);
    if (!cf.next_delta.empty()) {
        std::vector<Value> den(order + 1, Value::zero(dom));
        den[0] = Value::one(dom);
        for (size_t j = 0; j < cf.next_delta.size() && static_cast<int>(j) + 1 <= order; ++j)
            den[j + 1] = -cf.next_delta[j];
        fk = Series(dom, std::move(den)).reciprocal();
    }
    for (int k = cf.length(); k >= 1; --k) {
        const CFTerm& t = cf.terms[k - 1];
        std::vector<Value> den(order + 1, Value::zero(dom));
        den[0] = Value::one(dom);
        for (size_t j = 0; j < t.delta.size() && static_cast<int>(j) + 1 <= order; ++j)
            den[j + 1] = -t.delta[j];
        for (int n = 0; n + t.p <= order; ++n) {
            if (fk.coeff(n).is_zero()) continue;
            den[n + t.p] = den[n + t.p] - t.alpha * fk.coeff(n);
        }
        fk = Series(dom, std::move(den)).reciprocal();
    }
    return fk.scaled(cf.alpha0);
}

std::vector<Value> as_sfraction(const CFraction& cf) {
    if (!cf.next_delta.empty())
        throw ShapeMismatch("fraction carries additive terms; not an S-fraction");
    std::vector<Value> alphas;
    alphas.reserve(cf.terms.size());
    for (size_t k = 0; k < cf.terms.size(); ++k) {
        const CFTerm& t = cf.terms[k];
        if (!t.delta.empty())
            throw ShapeMismatch("level " + std::to_string(k + 1) + " has an additive term");
        if (t.p != 1)
            throw ShapeMismatch("level " + std::to_string(k + 1) + " has p = " +
                                std::to_string(t.p) +
                                "; a vanishing coefficient pattern is incompatible with a "
                                "regular C-fraction");
        alphas.push_back(t.alpha);
    }
    return alphas;
}

JFractionCoeffs as_jfraction(const CFraction& cf) {
    JFractionCoeffs out;
    for (size_t k = 0; k < cf.terms.size(); ++k) {
        const CFTerm& t = cf.terms[k];
        if (t.delta.size() != 1 || t.p != 2)
            throw ShapeMismatch("level " + std::to_string(k + 1) +
                                " does not have the associated form (M = 1, p = 2)");
        out.gammas.push_back(t.delta[0]);
        out.betas.push_back(t.alpha);
    }
    if (cf.next_delta.size() > 1)
        throw ShapeMismatch("trailing additive term has degree > 1");
    if (cf.next_delta.size() == 1) out.gammas.push_back(cf.next_delta[0]);
    return out;
}

JFractionCoeffs contract_s_to_j(const std::vector<Value>& alphas) {
    JFractionCoeffs out;
    int m = static_cast<int>(alphas.size());
    auto a = [&](int i) { return alphas[i - 1]; };
    if (m >= 1) out.gammas.push_back(a(1));
    for (int n = 1; 2 * n + 1 <= m; ++n) out.gammas.push_back(a(2 * n) + a(2 * n + 1));
    for (int n = 1; 2 * n <= m; ++n) out.betas.push_back(a(2 * n - 1) * a(2 * n));
    return out;
}

Series sfraction_series(const Domain& d, const std::vector<Value>& alphas, int order) {
    CFraction cf{d, Value::one(d), {}, false, 0, {}};
    int k_needed = order;
    int k = std::min<int>(static_cast<int>(alphas.size()), k_needed);
    for (int i = 0; i < k; ++i) cf.terms.push_back({{}, alphas[i], 1});
    if (static_cast<int>(alphas.size()) >= k_needed)
        cf.budget = order - k; // inconclusive beyond the supplied prefix
    else
        cf.terminated = true;  // the list is the whole fraction
    return cf_to_series(cf, order);
}

Series jfraction_series(const Domain& d, const std::vector<Value>& gammas,
                        const std::vector<Value>& betas, int order) {
    CFraction cf{d, Value::one(d), {}, false, 0, {}};
    int k_needed = (order + 1) / 2;
    int avail = static_cast<int>(std::min(gammas.size(), betas.size()));
    int k = std::min(avail, k_needed);
    for (int i = 0; i < k; ++i) cf.terms.push_back({{gammas[i]}, betas[i], 2});
    if (avail >= k_needed) {
        cf.budget = std::max(0, order - 2 * k);
    } else {
        cf.terminated = true;
        if (static_cast<int>(gammas.size()) > k) cf.next_delta = {gammas[k]};
    }
    return cf_to_series(cf, order);
}

HankelJFraction jfraction_from_hankel(const std::vector<Value>& a) {
    if (a.empty() || a.size() % 2 == 0)
        throw IndexOutOfRange("need an odd number of entries a_0..a_{2m}");
    int m = static_cast<int>((a.size() - 1) / 2);
    const Domain& dom = a[0].domain();
    auto h = [&](int i, int j) { return a[i + j]; };
    std::vector<std::vector<Value>> lower(m + 1, std::vector<Value>(m + 1, Value::zero(dom)));
    std::vector<Value> d(m + 1, Value::zero(dom));
    for (int j = 0; j <= m; ++j) {
        Value dj = h(j, j);
        for (int k = 0; k < j; ++k) {
            if (lower[j][k].is_zero()) continue;
            dj = dj - lower[j][k] * lower[j][k] * d[k];
        }
        if (dj.is_zero())
            throw SingularPivot("Hankel pivot d_" + std::to_string(j) +
                                " vanishes; no classical J-fraction of this depth exists");
        d[j] = dj;
        lower[j][j] = Value::one(dom);
        for (int i = j + 1; i <= m; ++i) {
            Value v = h(i, j);
            for (int k = 0; k < j; ++k) {
                if (lower[i][k].is_zero() || lower[j][k].is_zero()) continue;
                v = v - lower[i][k] * lower[j][k] * d[k];
            }
            lower[i][j] = Value::exact_div(v, dj);
        }
    }
    HankelJFraction out{d[0], {}, {}};
    for (int k = 0; k + 1 <= m; ++k) {
        Value g = lower[k + 1][k];
        if (k >= 1) g = g - lower[k][k - 1];
        out.gammas.push_back(g);
    }
    for (int k = 1; k <= m; ++k) out.betas.push_back(Value::exact_div(d[k], d[k - 1]));
    return out;
}

std::string RecurrenceReport::to_string() const {
    if (ok) return "pass";
    std::ostringstream s;
    s << "first mismatch at (k=" << k << ", n=" << n << "): lhs = " << lhs
      << ", rhs = " << rhs;
    return s.str();
}

RecurrenceReport euler_gauss_verify(const std::vector<Series>& gs,
                                    const std::vector<Series>& deltas,
                                    const std::vector<Series>& as, int order) {
    if (gs.size() < 2) throw IndexOutOfRange("need at least g_{-1} and g_0");
    int levels = static_cast<int>(gs.size()) - 2; // K
    if (static_cast<int>(deltas.size()) < levels || static_cast<int>(as.size()) < levels)
        throw IndexOutOfRange("need Delta_{k+1} and A_{k+1} for k = 0..K-1");
    for (const auto& g : gs) {
        if (g.order() < order) throw OrderUnderflow("a g_k is shorter than the check order");
        if (!g.coeff(0).is_one())
            throw BadConstantTerm("every g_k must have constant term 1");
    }
    for (int i = 0; i < levels; ++i) {
        if (deltas[i].order() < order || as[i].order() < order)
            throw OrderUnderflow("a Delta_k or A_k is shorter than the check order");
        if (!deltas[i].coeff(0).is_zero() || !as[i].coeff(0).is_zero())
            throw BadConstantTerm("Delta_k and A_k must have zero constant term");
    }
    for (int k = 0; k < levels; ++k) {
        Series lhs = gs[k + 1].truncated(order) - gs[k].truncated(order);
        Series rhs = deltas[k].truncated(order) * gs[k + 1].truncated(order) +
                     as[k].truncated(order) * gs[k + 2].truncated(order);
        for (int n = 0; n <= order; ++n) {
            if (lhs.coeff(n) != rhs.coeff(n)) {
                RecurrenceReport rep;
                rep.ok = false;
                rep.k = k;
                rep.n = n;
                rep.lhs = lhs.coeff(n).to_string();
                rep.rhs = rhs.coeff(n).to_string();
                return rep;
            }
        }
    }
    return RecurrenceReport{};
}

ScanResult stieltjes_positivity_scan(const std::vector<Rational>& a) {
    if (a.empty() || a[0] <= 0) throw BadParams("the sequence must start with a_0 > 0");
    Series f = Series::from_rationals(Domain::rationals(), a);
    Expansion e = expand_refined(f, ExpansionShape::c_fraction());
    int idx = 0;
    for (const auto& t : e.cf.terms) {
        ++idx;
        if (t.p != 1)
            throw PEncountered("a zero coefficient pattern arose at alpha_" +
                                   std::to_string(idx) + " (p = " + std::to_string(t.p) + ")",
                               idx);
        if (t.alpha.sign() < 0) return {ScanResult::Kind::FoundNegative, idx};
    }
    return {e.cf.terminated ? ScanResult::Kind::Terminated : ScanResult::Kind::BudgetExhausted,
            idx};
}

} // namespace cfrac
