#include "qdt/json_io.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace qdt {

namespace {

std::vector<std::string> labels_of(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw InputError(std::string("missing array field \"") + key + "\"");
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string()) throw InputError(std::string("labels in \"") + key + "\" must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

ExtReal cell_value(const Json& v) {
  try {
    if (v.is_string()) return ExtReal::parse(v.get<std::string>());
    if (v.is_number_unsigned()) return ExtReal(static_cast<std::int64_t>(v.get<std::uint64_t>()));
    if (v.is_number_integer()) {
      if (v.get<std::int64_t>() < 0) throw InputError("negative entry " + v.dump());
      return ExtReal(v.get<std::int64_t>());
    }
  } catch (const ParseError& e) {
    throw InputError(std::string("bad entry: ") + e.what());
  }
  throw InputError("entries must be strings like \"1/2\" or \"inf\", or nonnegative integers: " + v.dump());
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

GRel relation_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  std::vector<std::string> labels = labels_of(j, "carrier");
  Carrier c;
  try {
    c = Carrier(labels);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad carrier: ") + e.what());
  }
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw InputError("missing array field \"matrix\"");
  const Json& m = j["matrix"];
  if (m.size() != c.size()) {
    std::ostringstream os;
    os << "non-square table: " << m.size() << " rows for " << c.size() << " labels";
    throw InputError(os.str());
  }
  GRel d(c);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array() || m[i].size() != c.size()) {
      std::ostringstream os;
      os << "non-square table: row " << i << " does not have " << c.size() << " entries";
      throw InputError(os.str());
    }
    for (std::size_t k = 0; k < c.size(); ++k) d(i, k) = cell_value(m[i][k]);
  }
  return d;
}

Json relation_to_json(const GRel& d) {
  Json j;
  j["carrier"] = d.source().labels();
  Json m = Json::array();
  for (std::size_t i = 0; i < d.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < d.cols(); ++k) r.push_back(d(i, k).to_string());
    m.push_back(r);
  }
  j["matrix"] = m;
  return j;
}

GRel parse_relation(const std::string& text) { return relation_from_json(parse_json(text)); }

NetProfile profile_from_json(const Json& j, const Carrier& c) {
  if (!j.is_object()) throw InputError("profile must be a JSON object");
  NetProfile p;
  try {
    if (j.contains("prefix"))
      for (const auto& l : labels_of(j, "prefix")) p.prefix.push_back(c.index_of(l));
    for (const auto& l : labels_of(j, "cycle")) p.cycle.push_back(c.index_of(l));
  } catch (const UnknownLabel& e) {
    throw InputError(std::string("unknown label: ") + e.what());
  }
  try {
    p.validate(c.size());
  } catch (const std::exception& e) {
    throw InputError(std::string("bad profile: ") + e.what());
  }
  return p;
}

Json profile_to_json(const NetProfile& p, const Carrier& c) {
  Json j;
  j["prefix"] = Json::array();
  for (auto i : p.prefix) j["prefix"].push_back(c.label(i));
  j["cycle"] = Json::array();
  for (auto i : p.cycle) j["cycle"].push_back(c.label(i));
  return j;
}

std::vector<ExtReal> radii_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("radii") || !j["radii"].is_array()) throw InputError("grid needs a \"radii\" array");
  std::vector<ExtReal> out;
  for (const auto& v : j["radii"]) {
    const ExtReal r = cell_value(v);
    if (r.is_infinite()) throw InputError("grid radii must be finite");
    out.push_back(r);
  }
  return out;
}

std::string instance_digest(const GRel& d) {
  const std::string text = relation_to_json(d).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json report_to_json(const Report& r, const GRel& d) {
  Json j;
  j["check"] = r.name;
  j["instance-digest"] = instance_digest(d);
  j["status"] = to_string(r.status);
  j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
  j["lines"] = r.lines;
  return j;
}

}  // namespace qdt
