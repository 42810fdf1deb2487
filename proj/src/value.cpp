#include "cfrac/value.hpp"

#include <cctype>

namespace cfrac {

Value Value::zero(const Domain& d) { return of_rational(d, Rational(0)); }
Value Value::one(const Domain& d) { return of_rational(d, Rational(1)); }

Value Value::of_rational(const Domain& d, const Rational& r) {
    switch (d.kind()) {
        case DomainKind::Rationals:
            return Value(d, r);
        case DomainKind::RationalFunctions:
            return Value(d, RatFun(r));
        case DomainKind::Polynomials:
            return Value(d, MPoly::constant(d.nvars(), r));
    }
    throw Error("unreachable");
}

Value Value::variable(const Domain& d, const std::string& name) {
    int idx = d.variable_index(name);
    if (idx < 0) throw BadParams("no variable '" + name + "' in " + d.description());
    if (d.kind() == DomainKind::RationalFunctions)
        return Value(d, RatFun(UPoly::variable()));
    if (d.kind() == DomainKind::Polynomials)
        return Value(d, MPoly::variable(d.nvars(), idx));
    throw BadParams("rationals have no variables");
}

Value Value::of_upoly(const Domain& d, const UPoly& p) {
    if (d.kind() != DomainKind::RationalFunctions)
        throw DomainMismatch("of_upoly needs a rational-function domain");
    return Value(d, RatFun(p));
}

Value Value::of_ratfun(const Domain& d, RatFun f) {
    if (d.kind() != DomainKind::RationalFunctions)
        throw DomainMismatch("of_ratfun needs a rational-function domain");
    return Value(d, std::move(f));
}

Value Value::of_mpoly(const Domain& d, MPoly p) {
    if (d.kind() != DomainKind::Polynomials)
        throw DomainMismatch("of_mpoly needs a polynomial domain");
    if (p.nvars() != d.nvars()) throw DomainMismatch("variable count mismatch");
    return Value(d, std::move(p));
}

bool Value::is_zero() const {
    return std::visit([](const auto& p) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Rational>)
            return p == 0;
        else
            return p.is_zero();
    }, payload_);
}

bool Value::is_one() const {
    return std::visit([](const auto& p) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Rational>)
            return p == 1;
        else
            return p.is_one();
    }, payload_);
}

bool Value::is_unit() const {
    if (is_zero()) return false;
    if (dom_.kind() != DomainKind::Polynomials) return true;
    return std::get<MPoly>(payload_).is_constant();
}

bool Value::is_rational_constant() const {
    switch (dom_.kind()) {
        case DomainKind::Rationals: return true;
        case DomainKind::RationalFunctions: return std::get<RatFun>(payload_).is_constant();
        case DomainKind::Polynomials: return std::get<MPoly>(payload_).is_constant();
    }
    return false;
}

Rational Value::rational_constant() const {
    switch (dom_.kind()) {
        case DomainKind::Rationals: return std::get<Rational>(payload_);
        case DomainKind::RationalFunctions: return std::get<RatFun>(payload_).constant_value();
        case DomainKind::Polynomials: return std::get<MPoly>(payload_).constant_value();
    }
    throw Error("unreachable");
}

int Value::sign() const {
    if (dom_.kind() != DomainKind::Rationals)
        throw DomainMismatch("sign() is defined for rationals only");
    return sgn(std::get<Rational>(payload_));
}

void check_same_domain(const Value& a, const Value& b) {
    if (a.domain() != b.domain())
        throw DomainMismatch("operands live in different domains: " +
                             a.domain().description() + " vs " + b.domain().description());
}

Value operator+(const Value& a, const Value& b) {
    check_same_domain(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::Rationals:
            return Value(a.dom_, Rational(std::get<Rational>(a.payload_) + std::get<Rational>(b.payload_)));
        case DomainKind::RationalFunctions:
            return Value(a.dom_, std::get<RatFun>(a.payload_) + std::get<RatFun>(b.payload_));
        case DomainKind::Polynomials:
            return Value(a.dom_, std::get<MPoly>(a.payload_) + std::get<MPoly>(b.payload_));
    }
    throw Error("unreachable");
}

Value operator-(const Value& a, const Value& b) {
    check_same_domain(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::Rationals:
            return Value(a.dom_, Rational(std::get<Rational>(a.payload_) - std::get<Rational>(b.payload_)));
        case DomainKind::RationalFunctions:
            return Value(a.dom_, std::get<RatFun>(a.payload_) - std::get<RatFun>(b.payload_));
        case DomainKind::Polynomials:
            return Value(a.dom_, std::get<MPoly>(a.payload_) - std::get<MPoly>(b.payload_));
    }
    throw Error("unreachable");
}

Value operator*(const Value& a, const Value& b) {
    check_same_domain(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::Rationals:
            return Value(a.dom_, Rational(std::get<Rational>(a.payload_) * std::get<Rational>(b.payload_)));
        case DomainKind::RationalFunctions:
            return Value(a.dom_, std::get<RatFun>(a.payload_) * std::get<RatFun>(b.payload_));
        case DomainKind::Polynomials:
            return Value(a.dom_, std::get<MPoly>(a.payload_) * std::get<MPoly>(b.payload_));
    }
    throw Error("unreachable");
}

Value Value::operator-() const {
    return std::visit([this](const auto& p) -> Value {
        return Value(dom_, std::decay_t<decltype(p)>(-p));
    }, payload_);
}

bool Value::operator==(const Value& o) const {
    if (dom_ != o.dom_) return false;
    return payload_ == o.payload_;
}

Value Value::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    switch (dom_.kind()) {
        case DomainKind::Rationals:
            return Value(dom_, Rational(1 / std::get<Rational>(payload_)));
        case DomainKind::RationalFunctions:
            return Value(dom_, std::get<RatFun>(payload_).inverse());
        case DomainKind::Polynomials: {
            const MPoly& p = std::get<MPoly>(payload_);
            if (!p.is_constant())
                throw NotInvertible("non-constant polynomial has no inverse in " +
                                    dom_.description());
            return of_rational(dom_, Rational(1) / p.constant_value());
        }
    }
    throw Error("unreachable");
}

Value Value::exact_div(const Value& x, const Value& y) {
    check_same_domain(x, y);
    if (y.is_zero()) throw DivisionByZero("exact division by zero");
    switch (x.dom_.kind()) {
        case DomainKind::Rationals:
            return Value(x.dom_, Rational(std::get<Rational>(x.payload_) /
                                          std::get<Rational>(y.payload_)));
        case DomainKind::RationalFunctions:
            return Value(x.dom_, std::get<RatFun>(x.payload_) *
                                     std::get<RatFun>(y.payload_).inverse());
        case DomainKind::Polynomials:
            return Value(x.dom_, MPoly::divide_exact(std::get<MPoly>(x.payload_),
                                                     std::get<MPoly>(y.payload_)));
    }
    throw Error("unreachable");
}

Value Value::scaled(const Rational& r) const {
    return std::visit([&](const auto& p) -> Value {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Rational>)
            return Value(dom_, Rational(p * r));
        else
            return Value(dom_, p.scaled(r));
    }, payload_);
}

const Rational& Value::as_rational() const { return std::get<Rational>(payload_); }
const RatFun& Value::as_ratfun() const { return std::get<RatFun>(payload_); }
const MPoly& Value::as_mpoly() const { return std::get<MPoly>(payload_); }

std::string Value::to_string() const {
    switch (dom_.kind()) {
        case DomainKind::Rationals:
            return rational_to_string(std::get<Rational>(payload_));
        case DomainKind::RationalFunctions:
            return std::get<RatFun>(payload_).to_string(dom_.variables()[0]);
        case DomainKind::Polynomials:
            return std::get<MPoly>(payload_).to_string(dom_.variables());
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Parsing of the CLI text encodings: rationals "p/q" | "n"; polynomials as
// sums of "coef*var^e" terms; rational functions "(num)/(den)".

namespace {

struct PolyParser {
    std::string_view s;
    size_t pos = 0;
    const Domain& dom;

    explicit PolyParser(std::string_view text, const Domain& d) : s(text), dom(d) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Rational parse_number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos == start) throw ParseError("expected a number in '" + std::string(s) + "'");
        return rational_from_string(s.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected an identifier in '" + std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    }

    // term := [number] {'*'? ident ['^' uint]}...   (leading sign handled by caller)
    MPoly parse_term() {
        int n = dom.nvars();
        Rational coef(1);
        MPoly::Exponents e(n, 0);
        bool saw_factor = false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = parse_number();
            saw_factor = true;
        }
        while (true) {
            char d = peek();
            if (d == '*') {
                ++pos;
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(d)) && d != '_') break;
            std::string name = parse_ident();
            int idx = dom.variable_index(name);
            if (idx < 0)
                throw ParseError("unknown variable '" + name + "' in " + dom.description());
            unsigned exp = 1;
            if (peek() == '^') {
                ++pos;
                Rational r = parse_number();
                if (r.get_den() != 1 || r < 0) throw ParseError("bad exponent");
                exp = static_cast<unsigned>(r.get_num().get_ui());
            }
            e[idx] += exp;
            saw_factor = true;
        }
        if (!saw_factor) throw ParseError("empty term in '" + std::string(s) + "'");
        return MPoly::monomial(n, e, coef);
    }

    MPoly parse_sum() {
        MPoly acc(dom.nvars());
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++pos;
        }
        while (true) {
            MPoly t = parse_term();
            acc = (sign < 0) ? acc - t : acc + t;
            char d = peek();
            if (d == '+' || d == '-') {
                sign = (d == '-') ? -1 : 1;
                ++pos;
                continue;
            }
            break;
        }
        return acc;
    }
};

UPoly mpoly_to_upoly(const MPoly& p) {
    UPoly r;
    for (size_t i = 0; i < p.term_count(); ++i) {
        const auto& [e, c] = p.term(i);
        r = r + UPoly::monomial(static_cast<int>(e[0]), c);
    }
    return r;
}

} // namespace

Value Value::parse(const Domain& d, std::string_view text) {
    switch (d.kind()) {
        case DomainKind::Rationals:
            return Value(d, rational_from_string(text));
        case DomainKind::Polynomials: {
            PolyParser p(text, d);
            MPoly m = p.parse_sum();
            if (!p.eof()) throw ParseError("trailing junk in '" + std::string(text) + "'");
            return Value(d, std::move(m));
        }
        case DomainKind::RationalFunctions: {
            // "(num)/(den)" or a bare polynomial in the field's variable.
            Domain poly = Domain::polynomials({d.variables()[0]});
            size_t a = text.find_first_not_of(" \t");
            if (a != std::string_view::npos && text[a] == '(') {
                size_t depth = 0, i = a, close = std::string_view::npos;
                for (; i < text.size(); ++i) {
                    if (text[i] == '(') ++depth;
                    if (text[i] == ')' && --depth == 0) {
                        close = i;
                        break;
                    }
                }
                size_t slash = text.find('/', close == std::string_view::npos ? a : close);
                if (close != std::string_view::npos && slash != std::string_view::npos) {
                    std::string_view num = text.substr(a + 1, close - a - 1);
                    std::string_view rest = text.substr(slash + 1);
                    size_t b1 = rest.find('(');
                    size_t b2 = rest.rfind(')');
                    if (b1 == std::string_view::npos || b2 == std::string_view::npos || b2 < b1)
                        throw ParseError("expected \"(num)/(den)\" in '" + std::string(text) + "'");
                    std::string_view den = rest.substr(b1 + 1, b2 - b1 - 1);
                    PolyParser pn(num, poly), pd(den, poly);
                    MPoly mn = pn.parse_sum();
                    MPoly md = pd.parse_sum();
                    if (!pn.eof() || !pd.eof())
                        throw ParseError("trailing junk in '" + std::string(text) + "'");
                    return Value(d, RatFun(mpoly_to_upoly(mn), mpoly_to_upoly(md)));
                }
            }
            PolyParser p(text, poly);
            MPoly m = p.parse_sum();
            if (!p.eof()) throw ParseError("trailing junk in '" + std::string(text) + "'");
            return Value(d, RatFun(mpoly_to_upoly(m)));
        }
    }
    throw Error("unreachable");
}

} // namespace cfrac
