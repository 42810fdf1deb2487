#ifndef CFRAC_DOMAIN_HPP
#define CFRAC_DOMAIN_HPP

#include <memory>
#include <string>
#include <vector>

#include "cfrac/errors.hpp"

namespace cfrac {

enum class DomainKind {
    Rationals,          // Q
    RationalFunctions,  // Q(x), a field
    Polynomials,        // Q[x1..xn], an integral domain with partial exact division
};

// Descriptor of a coefficient domain. Cheap to copy (shared immutable state);
// equality is structural. The declared variable order fixes the canonical
// monomial order of the polynomial ring.
class Domain {
public:
    Domain() : Domain(rationals()) {}
    static Domain rationals();
    static Domain rational_functions(const std::string& variable);
    static Domain polynomials(const std::vector<std::string>& variables);

    DomainKind kind() const { return data_->kind; }
    const std::vector<std::string>& variables() const { return data_->vars; }
    bool is_field() const { return kind() != DomainKind::Polynomials; }
    int nvars() const { return static_cast<int>(data_->vars.size()); }
    int variable_index(const std::string& name) const; // -1 if absent

    bool operator==(const Domain& o) const;
    bool operator!=(const Domain& o) const { return !(*this == o); }

    std::string description() const;

private:
    struct Data {
        DomainKind kind;
        std::vector<std::string> vars;
    };
    explicit Domain(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

} // namespace cfrac

#endif
