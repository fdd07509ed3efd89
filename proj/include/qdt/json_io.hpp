#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdt/grel.hpp"
#include "qdt/report.hpp"

namespace qdt {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

// {"carrier": [labels], "matrix": [[text, ...], ...]}, rows indexed by source.
GRel relation_from_json(const Json& j);
Json relation_to_json(const GRel& d);
GRel parse_relation(const std::string& text);

// {"prefix": [labels], "cycle": [labels]}
NetProfile profile_from_json(const Json& j, const Carrier& c);
Json profile_to_json(const NetProfile& p, const Carrier& c);

// {"radii": ["0", "1/4", ...]}
std::vector<ExtReal> radii_from_json(const Json& j);

// Stable 64-bit FNV-1a digest of the canonical instance text.
std::string instance_digest(const GRel& d);
Json report_to_json(const Report& r, const GRel& d);

Json parse_json(const std::string& text);

}  // namespace qdt
