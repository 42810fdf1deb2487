#include "cfrac/domain.hpp"

#include <set>

namespace cfrac {

Domain Domain::rationals() {
    static const auto data = std::make_shared<const Data>(Data{DomainKind::Rationals, {}});
    return Domain(data);
}

Domain Domain::rational_functions(const std::string& variable) {
    if (variable.empty()) throw BadParams("variable name must be nonempty");
    return Domain(std::make_shared<const Data>(
        Data{DomainKind::RationalFunctions, {variable}}));
}

Domain Domain::polynomials(const std::vector<std::string>& variables) {
    if (variables.empty()) throw BadParams("polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw BadParams("variable name must be nonempty");
        if (!seen.insert(v).second) throw BadParams("duplicate variable name: " + v);
    }
    return Domain(std::make_shared<const Data>(Data{DomainKind::Polynomials, variables}));
}

int Domain::variable_index(const std::string& name) const {
    for (size_t i = 0; i < data_->vars.size(); ++i)
        if (data_->vars[i] == name) return static_cast<int>(i);
    return -1;
}

bool Domain::operator==(const Domain& o) const {
    if (data_ == o.data_) return true;
    return data_->kind == o.data_->kind && data_->vars == o.data_->vars;
}

std::string Domain::description() const {
    switch (kind()) {
        case DomainKind::Rationals:
            return "Q";
        case DomainKind::RationalFunctions:
            return "Q(" + data_->vars[0] + ")";
        case DomainKind::Polynomials: {
            std::string s = "Q[";
            for (size_t i = 0; i < data_->vars.size(); ++i) {
                if (i) s += ",";
                s += data_->vars[i];
            }
            return s + "]";
        }
    }
    return "?";
}

} // namespace cfrac
