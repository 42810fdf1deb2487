#ifndef CFRAC_JSON_IO_HPP
#define CFRAC_JSON_IO_HPP

#include <json.hpp>

#include "cfrac/catalog.hpp"
#include "cfrac/expand.hpp"
#include "cfrac/paths.hpp"

namespace cfrac {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "cfrac/1";

json domain_to_json(const Domain& d);
Domain domain_from_json(const json& j);

// Literal series object: {"domain": ..., "coeffs": ["...", ...], "order": N}.
json series_to_json(const Series& s);
Series series_from_json(const json& j);

json cfraction_to_json(const CFraction& cf);
CFraction cfraction_from_json(const json& j);

// Parse either a literal series object or {"family": ..., "params": ..., "order": N}.
Series series_or_family_from_json(const json& j);
SeriesSpec series_spec_from_json(const json& j);

// Full expansion report: fraction, status, domain, input digest, timing, and
// the classical coefficient views where the shape admits them.
json expansion_report(const CFraction& cf, const std::string& input_digest, double ms);

json table_to_json(const TriangularTable& t);

json error_object(const Error& e);

// FNV-1a over the canonical text encoding of the coefficients.
std::string digest_series(const Series& s);

} // namespace cfrac

#endif
