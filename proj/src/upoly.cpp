#include "cfrac/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace cfrac {

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(std::string_view s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw ParseError("empty rational literal");
    std::string body(s.substr(a, b - a + 1));
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw ParseError("bad rational literal: '" + body + "'");
    }
    size_t slash = body.find('/');
    if (slash != std::string::npos &&
        (slash == 0 || slash + 1 == body.size() || body.find('/', slash + 1) != std::string::npos))
        throw ParseError("bad rational literal: '" + body + "'");
    Rational r;
    if (r.set_str(body, 10) != 0) throw ParseError("bad rational literal: '" + body + "'");
    if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator: '" + body + "'");
    r.canonicalize();
    return r;
}

UPoly::UPoly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

UPoly UPoly::variable() { return monomial(1, Rational(1)); }

UPoly UPoly::monomial(int degree, const Rational& coef) {
    UPoly p;
    if (coef != 0) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_[degree] = coef;
    }
    return p;
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational UPoly::constant_value() const { return c_.empty() ? Rational(0) : c_[0]; }

const Rational& UPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rational& UPoly::leading() const { return c_.back(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

UPoly UPoly::scaled(const Rational& s) const {
    if (s == 0) return UPoly();
    UPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) throw DivisionByZero("monic() of zero polynomial");
    return scaled(Rational(1) / leading());
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    q = UPoly();
    r = a;
    int db = b.degree();
    Rational inv_lb = Rational(1) / b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int d = r.degree() - db;
        Rational c = r.leading() * inv_lb;
        if (q.c_.size() < static_cast<size_t>(d + 1)) q.c_.resize(d + 1, Rational(0));
        q.c_[d] += c;
        for (int i = 0; i <= db; ++i) r.c_[i + d] -= c * b.c_[i];
        r.trim();
    }
    q.trim();
}

UPoly UPoly::divide_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw NonExactDivision("polynomial division leaves a remainder");
    return q;
}

namespace {

using ZPoly = std::vector<Integer>; // ascending, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zprimitive(ZPoly& p) {
    Integer g = zcontent(p);
    if (g == 0 || g == 1) return;
    for (auto& c : p) c /= g;
}

// Scaled remainder: repeatedly r <- lc(b)*r - lc(r)*x^d*b. The result is an
// integer multiple of the pseudo-remainder; only similarity matters here since
// every step of the PRS below re-extracts content.
ZPoly zscaled_rem(ZPoly r, const ZPoly& b) {
    const Integer& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        int d = static_cast<int>(r.size() - b.size());
        Integer lr = r.back();
        for (auto& c : r) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) r[i + d] -= lr * b[i];
        ztrim(r);
    }
    return r;
}

ZPoly to_zpoly(const UPoly& p) {
    Integer l(1);
    for (int i = 0; i <= p.degree(); ++i)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.coeff(i).get_den().get_mpz_t());
    ZPoly z(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i) * l;
        z[i] = c.get_num();
    }
    ztrim(z);
    return z;
}

} // namespace

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) return UPoly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Factor out the common power of x first; monomial-heavy operands then
    // reduce to a constant gcd immediately.
    size_t ta = 0, tb = 0;
    while (a.c_[ta] == 0) ++ta;
    while (b.c_[tb] == 0) ++tb;
    size_t shift = std::min(ta, tb);
    ZPoly u = to_zpoly(a), v = to_zpoly(b);
    if (ta) u.erase(u.begin(), u.begin() + ta);
    if (tb) v.erase(v.begin(), v.begin() + tb);
    zprimitive(u);
    zprimitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    while (v.size() > 1) {
        ZPoly r = zscaled_rem(u, v);
        if (r.empty()) break;
        zprimitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    UPoly g;
    if (v.size() == 1) {
        g.c_.assign(shift + 1, Rational(0));
        g.c_[shift] = Rational(1);
        return g;
    }
    g.c_.assign(shift + v.size(), Rational(0));
    for (size_t i = 0; i < v.size(); ++i) g.c_[shift + i] = Rational(v[i]);
    return g.monic();
}

Rational UPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out << rational_to_string(mag);
        } else {
            if (!unit) out << rational_to_string(mag) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace cfrac
