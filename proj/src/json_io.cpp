#include "cfrac/json_io.hpp"

#include <iomanip>
#include <sstream>

namespace cfrac {

json domain_to_json(const Domain& d) {
    switch (d.kind()) {
        case DomainKind::Rationals:
            return json{{"kind", "rational"}};
        case DomainKind::RationalFunctions:
            return json{{"kind", "rational_function"}, {"variable", d.variables()[0]}};
        case DomainKind::Polynomials:
            return json{{"kind", "polynomial"}, {"variables", d.variables()}};
    }
    throw Error("unreachable");
}

Domain domain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("domain object needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Domain::rationals();
    if (kind == "rational_function")
        return Domain::rational_functions(j.at("variable").get<std::string>());
    if (kind == "polynomial")
        return Domain::polynomials(j.at("variables").get<std::vector<std::string>>());
    throw ParseError("unknown domain kind '" + kind + "'");
}

json series_to_json(const Series& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s.coeff(i).to_string());
    return json{{"schema", kSchemaTag},
                {"domain", domain_to_json(s.domain())},
                {"coeffs", coeffs},
                {"order", s.order()}};
}

Series series_from_json(const json& j) {
    Domain d = j.contains("domain") ? domain_from_json(j.at("domain")) : Domain::rationals();
    if (!j.contains("coeffs")) throw ParseError("series object needs \"coeffs\"");
    std::vector<Value> c;
    for (const auto& s : j.at("coeffs")) c.push_back(Value::parse(d, s.get<std::string>()));
    if (j.contains("order")) {
        int n = j.at("order").get<int>();
        if (n != static_cast<int>(c.size()) - 1)
            throw ParseError("\"order\" disagrees with the coefficient count");
    }
    return Series(d, std::move(c));
}

SeriesSpec series_spec_from_json(const json& j) {
    SeriesSpec spec;
    spec.family = j.at("family").get<std::string>();
    spec.order = j.at("order").get<int>();
    if (j.contains("params")) {
        for (const auto& [k, v] : j.at("params").items()) {
            std::string s = v.is_string() ? v.get<std::string>() : v.dump();
            if (s == "sym" || s == "symbolic")
                spec.params.emplace(k, ParamValue::sym());
            else
                spec.params.emplace(k, ParamValue::num(rational_from_string(s)));
        }
    }
    return spec;
}

Series series_or_family_from_json(const json& j) {
    if (j.contains("family")) return generate(series_spec_from_json(j));
    return series_from_json(j);
}

json cfraction_to_json(const CFraction& cf) {
    json terms = json::array();
    for (const auto& t : cf.terms) {
        json delta = json::array();
        for (const auto& d : t.delta) delta.push_back(d.to_string());
        terms.push_back(json{{"delta", delta}, {"alpha", t.alpha.to_string()}, {"p", t.p}});
    }
    json nd = json::array();
    for (const auto& d : cf.next_delta) nd.push_back(d.to_string());
    json status;
    if (cf.terminated)
        status = json{{"kind", "terminated"},
                      {"length", cf.length()},
                      {"witness_budget", cf.budget}};
    else
        status = json{{"kind", "inconclusive"}, {"budget", cf.budget}};
    status["next_delta"] = nd;
    return json{{"schema", kSchemaTag},
                {"domain", domain_to_json(cf.domain)},
                {"alpha0", cf.alpha0.to_string()},
                {"terms", terms},
                {"status", status}};
}

CFraction cfraction_from_json(const json& j) {
    Domain d = domain_from_json(j.at("domain"));
    CFraction cf{d, Value::parse(d, j.at("alpha0").get<std::string>()), {}, false, 0, {}};
    for (const auto& t : j.at("terms")) {
        CFTerm term{{}, Value::parse(d, t.at("alpha").get<std::string>()),
                    t.at("p").get<int>()};
        for (const auto& dd : t.at("delta"))
            term.delta.push_back(Value::parse(d, dd.get<std::string>()));
        cf.terms.push_back(std::move(term));
    }
    const json& status = j.at("status");
    std::string kind = status.at("kind").get<std::string>();
    if (kind == "terminated") {
        cf.terminated = true;
        cf.budget = status.at("witness_budget").get<int>();
        if (status.at("length").get<int>() != cf.length())
            throw ParseError("status length disagrees with the term count");
    } else if (kind == "inconclusive") {
        cf.terminated = false;
        cf.budget = status.at("budget").get<int>();
    } else {
        throw ParseError("unknown status kind '" + kind + "'");
    }
    if (status.contains("next_delta"))
        for (const auto& dd : status.at("next_delta"))
            cf.next_delta.push_back(Value::parse(d, dd.get<std::string>()));
    return cf;
}

json expansion_report(const CFraction& cf, const std::string& input_digest, double ms) {
    json rep = cfraction_to_json(cf);
    rep["input_digest"] = input_digest;
    rep["ms"] = ms;
    try {
        json alphas = json::array();
        for (const auto& a : as_sfraction(cf)) alphas.push_back(a.to_string());
        rep["sfrac"] = alphas;
    } catch (const ShapeMismatch&) {
    }
    try {
        JFractionCoeffs jc = as_jfraction(cf);
        json gammas = json::array(), betas = json::array();
        for (const auto& g : jc.gammas) gammas.push_back(g.to_string());
        for (const auto& b : jc.betas) betas.push_back(b.to_string());
        rep["jfrac"] = json{{"gammas", gammas}, {"betas", betas}};
    } catch (const ShapeMismatch&) {
    }
    return rep;
}

json table_to_json(const TriangularTable& t) {
    json rows = json::array();
    for (int n = 0; n <= t.size(); ++n) {
        json row = json::array();
        for (int k = 0; k <= n; ++k) row.push_back(t.at(n, k).to_string());
        rows.push_back(row);
    }
    std::string kind = t.kind == TableKind::J ? "J" : (t.kind == TableKind::S ? "S" : "Sprime");
    return json{{"schema", kSchemaTag},
                {"kind", kind},
                {"size", t.size()},
                {"domain", domain_to_json(t.domain)},
                {"rows", rows}};
}

json error_object(const Error& e) {
    return json{{"schema", kSchemaTag},
                {"error", json{{"type", e.code()}, {"message", e.what()}}}};
}

std::string digest_series(const Series& s) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& str) {
        for (unsigned char c : str) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(s.domain().description());
    for (int i = 0; i <= s.order(); ++i) mix(s.coeff(i).to_string());
    std::ostringstream out;
    out << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

} // namespace cfrac
