#include "cfrac/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cfrac {

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw IndexOutOfRange("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

MPoly MPoly::monomial(int nvars, Exponents e, const Rational& c) {
    MPoly p(nvars);
    if (static_cast<int>(e.size()) != nvars) throw IndexOutOfRange("exponent tuple size mismatch");
    if (c != 0) p.terms_.push_back({std::move(e), c});
    return p;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 &&
           std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](unsigned e) { return e == 0; });
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](unsigned e) { return e == 0; });
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_[0].second;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

Rational MPoly::coeff(const Exponents& e) const {
    for (const auto& [ex, c] : terms_)
        if (ex == e) return c;
    return Rational(0);
}

bool MPoly::lex_less(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void MPoly::insert_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, const Exponents& key) { return key < t.first; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {e, c});
    }
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

// Merge two descending term lists; `sign` applies to b.
MPoly MPoly::merge(const MPoly& a, const MPoly& b, int sign) {
    if (a.nvars_ != b.nvars_) throw DomainMismatch("polynomial variable sets differ");
    MPoly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() ||
            (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
            auto t = b.terms_[j++];
            if (sign < 0) t.second = -t.second;
            r.terms_.push_back(std::move(t));
        } else {
            Rational c = sign < 0 ? Rational(a.terms_[i].second - b.terms_[j].second)
                                  : Rational(a.terms_[i].second + b.terms_[j].second);
            if (c != 0) r.terms_.push_back({a.terms_[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) { return MPoly::merge(a, b, +1); }
MPoly operator-(const MPoly& a, const MPoly& b) { return MPoly::merge(a, b, -1); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainMismatch("polynomial variable sets differ");
    std::map<MPoly::Exponents, Rational, std::greater<MPoly::Exponents>> acc;
    MPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
            Rational p = ca * cb;
            auto [it, inserted] = acc.try_emplace(e, p);
            if (!inserted) {
                it->second += p;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    MPoly r(a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [ex, c] : acc) r.terms_.push_back({ex, c});
    return r;
}

MPoly MPoly::scaled(const Rational& s) const {
    if (s == 0) return MPoly(nvars_);
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MPoly MPoly::divide_exact(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars()) throw DomainMismatch("polynomial variable sets differ");
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly q(a.nvars());
    MPoly r = a;
    const Exponents& lb = b.term(0).first;
    const Rational& cb = b.term(0).second;
    Exponents diff(a.nvars());
    while (!r.is_zero()) {
        const Exponents& lr = r.terms_[0].first;
        for (int v = 0; v < a.nvars(); ++v) {
            if (lr[v] < lb[v]) throw NonExactDivision("polynomial does not divide exactly");
            diff[v] = lr[v] - lb[v];
        }
        MPoly t = monomial(a.nvars(), diff, r.terms_[0].second / cb);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

MPoly MPoly::eval_partial(const std::vector<std::optional<Rational>>& vals) const {
    if (static_cast<int>(vals.size()) != nvars_)
        throw IndexOutOfRange("substitution tuple size mismatch");
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational coef = c;
        Exponents ne = e;
        for (int v = 0; v < nvars_; ++v) {
            if (!vals[v].has_value() || e[v] == 0) continue;
            Rational pw(1);
            for (unsigned k = 0; k < e[v]; ++k) pw *= *vals[v];
            coef *= pw;
            ne[v] = 0;
        }
        r.insert_term(ne, coef);
    }
    return r;
}

MPoly MPoly::project(const std::vector<int>& keep, int new_nvars) const {
    MPoly r(new_nvars);
    std::vector<bool> kept(nvars_, false);
    for (int v : keep) kept[v] = true;
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_nvars, 0);
        for (int v = 0, j = 0; v < nvars_; ++v) {
            if (kept[v]) {
                ne[j++] = e[v];
            } else if (e[v] != 0) {
                throw IndexOutOfRange("projecting away a variable still in use");
            }
        }
        r.insert_term(ne, c);
    }
    return r;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
        if (!any_var) {
            out << rational_to_string(mag);
            continue;
        }
        bool lead = true;
        if (mag != 1) {
            out << rational_to_string(mag);
            lead = false;
        }
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!lead) out << "*";
            out << vars[v];
            if (e[v] > 1) out << "^" << e[v];
            lead = false;
        }
    }
    return out.str();
}

} // namespace cfrac
