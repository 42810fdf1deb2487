#include "cfrac/paths.hpp"

#include <sstream>

namespace cfrac {

const Value& PathWeights::alpha(int i) const {
    if (i < 1 || i > static_cast<int>(alphas.size()))
        throw IndexOutOfRange("alpha_" + std::to_string(i) + " not supplied");
    return alphas[i - 1];
}

const Value& PathWeights::beta(int i) const {
    if (i < 1 || i > static_cast<int>(betas.size()))
        throw IndexOutOfRange("beta_" + std::to_string(i) + " not supplied");
    return betas[i - 1];
}

const Value& PathWeights::gamma(int i) const {
    if (i < 0 || i >= static_cast<int>(gammas.size()))
        throw IndexOutOfRange("gamma_" + std::to_string(i) + " not supplied");
    return gammas[i];
}

Value PathWeights::rise(int i) const {
    if (rises.empty()) return Value::one(domain);
    if (i < 0 || i >= static_cast<int>(rises.size()))
        throw IndexOutOfRange("rise weight at height " + std::to_string(i) + " not supplied");
    return rises[i];
}

const Value& TriangularTable::at(int n, int k) const {
    if (n < 0 || n > size() || k < 0 || k > n)
        throw IndexOutOfRange("table index out of range");
    return rows[n][k];
}

TriangularTable jacobi_rogers_table(const PathWeights& w, int n) {
    TriangularTable t{TableKind::J, w.domain, {}};
    t.rows.assign(n + 1, {});
    t.rows[0] = {Value::one(w.domain)};
    for (int m = 0; m < n; ++m) {
        t.rows[m + 1].assign(m + 2, Value::zero(w.domain));
        for (int k = 0; k <= m + 1; ++k) {
            Value v = Value::zero(w.domain);
            if (k >= 1 && k - 1 <= m) v = v + t.rows[m][k - 1];
            if (k <= m) v = v + w.gamma(k) * t.rows[m][k];
            if (k + 1 <= m) v = v + w.beta(k + 1) * t.rows[m][k + 1];
            t.rows[m + 1][k] = v;
        }
    }
    return t;
}

std::pair<TriangularTable, TriangularTable> stieltjes_tables(const Domain& d,
                                                             const std::vector<Value>& alphas,
                                                             int n) {
    if (static_cast<int>(alphas.size()) < 2 * n)
        throw IndexOutOfRange("need alphas through index 2n");
    auto a = [&](int i) { return alphas[i - 1]; };
    TriangularTable s{TableKind::S, d, {}};
    TriangularTable sp{TableKind::Sprime, d, {}};
    s.rows.assign(n + 1, {});
    sp.rows.assign(n + 1, {});
    s.rows[0] = {Value::one(d)};
    for (int m = 0; m <= n; ++m) {
        // S'_{m,k} = S_{m,k} + alpha_{2k+2} S_{m,k+1}
        sp.rows[m].assign(m + 1, Value::zero(d));
        for (int k = 0; k <= m; ++k) {
            Value v = s.rows[m][k];
            if (k + 1 <= m) v = v + a(2 * k + 2) * s.rows[m][k + 1];
            sp.rows[m][k] = v;
        }
        if (m == n) break;
        // S_{m+1,k} = S'_{m,k-1} + alpha_{2k+1} S'_{m,k}
        s.rows[m + 1].assign(m + 2, Value::zero(d));
        for (int k = 0; k <= m + 1; ++k) {
            Value v = Value::zero(d);
            if (k >= 1 && k - 1 <= m) v = v + sp.rows[m][k - 1];
            if (k <= m) v = v + a(2 * k + 1) * sp.rows[m][k];
            s.rows[m + 1][k] = v;
        }
    }
    return {std::move(s), std::move(sp)};
}

Value weight_of_path(const PathWeights& w, int start_height, const std::vector<Step>& steps,
                     PathMode mode) {
    Value acc = Value::one(w.domain);
    int h = start_height;
    for (Step s : steps) {
        switch (s) {
            case Step::Rise:
                acc = acc * w.rise(h);
                ++h;
                break;
            case Step::Level:
                if (mode == PathMode::Dyck) throw BadParams("Dyck paths have no level steps");
                acc = acc * w.gamma(h);
                break;
            case Step::Fall:
                if (h <= 0) throw BadParams("fall below the floor");
                acc = acc * (mode == PathMode::Dyck ? w.alpha(h) : w.beta(h));
                --h;
                break;
        }
    }
    return acc;
}

namespace {

void enumerate_rec(const PathWeights& w, PathMode mode, int floor, int remaining, int h,
                   int end, const Value& acc, Value& total) {
    if (remaining == 0) {
        if (h == end) total = total + acc;
        return;
    }
    // Prune: |h - end| must be reachable in the remaining steps.
    if (std::abs(h - end) > remaining) return;
    enumerate_rec(w, mode, floor, remaining - 1, h + 1, end, acc * w.rise(h), total);
    if (mode == PathMode::Motzkin)
        enumerate_rec(w, mode, floor, remaining - 1, h, end, acc * w.gamma(h), total);
    if (h > floor) {
        const Value& fw = mode == PathMode::Dyck ? w.alpha(h) : w.beta(h);
        enumerate_rec(w, mode, floor, remaining - 1, h - 1, end, acc * fw, total);
    }
}

} // namespace

Value enumerate_weighted_paths(const PathWeights& w, int n, int start_height, int end_height,
                               PathMode mode) {
    if (n < 0 || start_height < 0 || end_height < 0)
        throw IndexOutOfRange("negative path parameters");
    if (n > 14) throw SizeLimit("exhaustive path enumeration is capped at length 14");
    int floor = std::min(start_height, end_height);
    Value total = Value::zero(w.domain);
    enumerate_rec(w, mode, floor, n, start_height, end_height, Value::one(w.domain), total);
    return total;
}

CheckReport flajolet_check(const PathWeights& w, int order) {
    return flajolet_check_against(w, jacobi_rogers_table(w, order), order);
}

CheckReport flajolet_check_against(const PathWeights& w, const TriangularTable& table,
                                   int order) {
    if (order > 10) throw SizeLimit("the enumeration leg is capped at order 10");
    if (!w.rises.empty())
        throw BadParams("the three-leg check needs unit rise weights");
    CheckReport rep;
    std::ostringstream detail;
    Series frac = jfraction_series(w.domain, w.gammas, w.betas, order);
    for (int n = 0; n <= order; ++n) {
        Value enumerated = enumerate_weighted_paths(w, n, 0, 0, PathMode::Motzkin);
        const Value& tab = table.at(n, 0);
        const Value& cf = frac.coeff(n);
        if (enumerated != tab) {
            rep.ok = false;
            detail << "n=" << n << ": enumeration " << enumerated.to_string()
                   << " != table " << tab.to_string() << "; ";
        }
        if (enumerated != cf) {
            rep.ok = false;
            detail << "n=" << n << ": enumeration " << enumerated.to_string()
                   << " != fraction " << cf.to_string() << "; ";
        }
    }
    // Product decomposition: paths 0 -> l factor through the level series,
    // g_{0->l} = f_0 f_1 ... f_l when rises weigh 1.
    for (int l = 1; l <= 3 && l <= order; ++l) {
        Series prod = jfraction_series(w.domain, w.gammas, w.betas, order - l);
        for (int shift = 1; shift <= l; ++shift) {
            std::vector<Value> g(w.gammas.begin() + shift, w.gammas.end());
            std::vector<Value> b(w.betas.begin() + shift, w.betas.end());
            prod = prod * jfraction_series(w.domain, g, b, order - l);
        }
        for (int m = 0; m + l <= order; ++m) {
            Value enumerated = enumerate_weighted_paths(w, m + l, 0, l, PathMode::Motzkin);
            if (enumerated != prod.coeff(m)) {
                rep.ok = false;
                detail << "level product l=" << l << ", t^" << m << ": enumeration "
                       << enumerated.to_string() << " != product " << prod.coeff(m).to_string()
                       << "; ";
            }
        }
    }
    rep.detail = rep.ok ? "enumeration, table and fraction legs agree" : detail.str();
    return rep;
}

CheckReport hankel_factorization_check(const std::vector<Value>& a, const PathWeights& w,
                                       int n, HankelForm form) {
    const Domain& d = w.domain;
    int shift = form == HankelForm::Sprime ? 1 : 0;
    if (static_cast<int>(a.size()) < 2 * n + 1 + shift)
        throw IndexOutOfRange("the sequence must reach index 2n (2n+1 for the shifted form)");

    std::vector<std::vector<Value>> lower;
    std::vector<Value> diag;
    std::string label;
    if (form == HankelForm::J) {
        TriangularTable t = jacobi_rogers_table(w, n);
        for (int i = 0; i <= n; ++i) lower.push_back(t.rows[i]);
        Value acc = Value::one(d);
        diag.push_back(acc);
        for (int k = 1; k <= n; ++k) {
            acc = acc * w.beta(k);
            diag.push_back(acc);
        }
        label = "H^(0)(a) = J D J^T with D = diag(1, b1, b1 b2, ...)";
    } else {
        auto [s, sp] = stieltjes_tables(d, w.alphas, n);
        const TriangularTable& t = form == HankelForm::S ? s : sp;
        for (int i = 0; i <= n; ++i) lower.push_back(t.rows[i]);
        Value acc = Value::one(d);
        if (form == HankelForm::S) {
            diag.push_back(acc);
            for (int k = 1; k <= n; ++k) {
                acc = acc * w.alpha(2 * k - 1) * w.alpha(2 * k);
                diag.push_back(acc);
            }
            label = "H^(0)(a) = S D S^T with D = diag(1, a1 a2, a1 a2 a3 a4, ...)";
        } else {
            acc = w.alpha(1);
            diag.push_back(acc);
            for (int k = 1; k <= n; ++k) {
                acc = acc * w.alpha(2 * k) * w.alpha(2 * k + 1);
                diag.push_back(acc);
            }
            label = "H^(1)(a) = S' D' S'^T with D' = diag(a1, a1 a2 a3, ...)";
        }
    }

    CheckReport rep;
    std::ostringstream detail;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Value sum = Value::zero(d);
            for (int k = 0; k <= std::min(i, j); ++k) {
                if (lower[i][k].is_zero() || lower[j][k].is_zero()) continue;
                sum = sum + lower[i][k] * diag[k] * lower[j][k];
            }
            if (sum != a[i + j + shift]) {
                rep.ok = false;
                detail << "entry (" << i << "," << j << "): " << sum.to_string()
                       << " != " << a[i + j + shift].to_string() << "; ";
            }
        }
    }
    std::ostringstream head;
    head << "checked " << label << " on the " << (n + 1) << "x" << (n + 1) << " block";
    rep.detail = rep.ok ? head.str() : head.str() + ": " + detail.str();
    return rep;
}

CheckReport g_table_correspondence_check(const PathWeights& w, int order, TableKind which) {
    const Domain& d = w.domain;
    CheckReport rep;
    std::ostringstream detail;
    if (which == TableKind::J) {
        Series f = jfraction_series(d, w.gammas, w.betas, order);
        Expansion e = expand_refined(f, ExpansionShape::j_fraction());
        TriangularTable t = jacobi_rogers_table(w, order);
        for (int k = 0; k < e.table.levels(); ++k) {
            for (int n = 0; n <= e.table.row_budget(k); ++n) {
                if (n + k > t.size()) break;
                if (e.table.rows[k][n] != t.at(n + k, k)) {
                    rep.ok = false;
                    detail << "g_{" << k << "," << n << "} = " << e.table.rows[k][n].to_string()
                           << " != J_{" << n + k << "," << k << "} = "
                           << t.at(n + k, k).to_string() << "; ";
                }
            }
        }
        rep.detail = rep.ok ? "g_{k,n} = J_{n+k,k} on every in-range index" : detail.str();
        return rep;
    }
    Series f = sfraction_series(d, w.alphas, order);
    Expansion e = expand_refined(f, ExpansionShape::c_fraction());
    auto [s, sp] = stieltjes_tables(d, w.alphas, order);
    for (int k = 0; k < e.table.levels(); ++k) {
        int j = k / 2;
        const TriangularTable& t = (k % 2 == 0) ? s : sp;
        for (int n = 0; n <= e.table.row_budget(k); ++n) {
            if (n + j > t.size()) break;
            if (e.table.rows[k][n] != t.at(n + j, j)) {
                rep.ok = false;
                detail << "g_{" << k << "," << n << "} = " << e.table.rows[k][n].to_string()
                       << " != " << (k % 2 == 0 ? "S" : "S'") << "_{" << n + j << "," << j
                       << "} = " << t.at(n + j, j).to_string() << "; ";
            }
        }
    }
    rep.detail = rep.ok ? "g_{2j,n} = S_{n+j,j} and g_{2j+1,n} = S'_{n+j,j} on every in-range index"
                        : detail.str();
    return rep;
}

} // namespace cfrac
