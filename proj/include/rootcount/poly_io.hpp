#ifndef ROOTCOUNT_POLY_IO_HPP
#define ROOTCOUNT_POLY_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rootcount/errors.hpp"
#include "rootcount/oracle.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/rat.hpp"

namespace rootcount {

// Shared polynomial text format: {"coeffs": [c0, c1, ...]} lowest-first.
// A real coefficient is a string "n" or "n/d"; a complex coefficient is
// {"re": "n/d", "im": "n/d"}.

using json = nlohmann::json;

inline GaussRat parse_gauss_rat(const json& j) {
  if (j.is_string()) return GaussRat(parse_rat(j.get<std::string>()));
  if (j.is_object() && j.contains("re") && j.contains("im") && j["re"].is_string() &&
      j["im"].is_string())
    return {parse_rat(j["re"].get<std::string>()), parse_rat(j["im"].get<std::string>())};
  throw ParseError("coefficient must be \"n/d\" or {\"re\":..., \"im\":...}: " + j.dump());
}

inline bool is_complex_poly_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial must be {\"coeffs\": [...]}");
  for (const auto& c : j["coeffs"])
    if (c.is_object()) return true;
  return false;
}

inline RPoly parse_rpoly(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial must be {\"coeffs\": [...]}");
  std::vector<Rat> cs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("real coefficient must be a string: " + c.dump());
    cs.push_back(parse_rat(c.get<std::string>()));
  }
  return RPoly(std::move(cs));
}

inline CPoly parse_cpoly(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial must be {\"coeffs\": [...]}");
  std::vector<GaussRat> cs;
  for (const auto& c : j["coeffs"]) cs.push_back(parse_gauss_rat(c));
  return CPoly(std::move(cs));
}

inline json to_json(const RPoly& p) {
  json cs = json::array();
  for (const auto& c : p.coeffs()) cs.push_back(rat_str(c));
  return json{{"coeffs", cs}};
}

inline json to_json(const GaussRat& z) {
  return json{{"re", rat_str(z.re)}, {"im", rat_str(z.im)}};
}

inline json to_json(const CPoly& p) {
  json cs = json::array();
  for (const auto& c : p.coeffs()) cs.push_back(to_json(c));
  return json{{"coeffs", cs}};
}

// RootSpec persistence (ground-truth sidecars, tests/fixtures).

inline json to_json(const RootSpec& spec) {
  json j;
  j["lead"] = to_json(spec.lead);
  j["real_roots"] = json::array();
  for (const auto& r : spec.real_roots)
    j["real_roots"].push_back({{"value", rat_str(r.value)}, {"mult", r.mult}});
  j["quad_factors"] = json::array();
  for (const auto& q : spec.quad_factors)
    j["quad_factors"].push_back({{"b", rat_str(q.b)}, {"c", rat_str(q.c)}, {"mult", q.mult}});
  j["complex_roots"] = json::array();
  for (const auto& z : spec.complex_roots)
    j["complex_roots"].push_back({{"value", to_json(z.value)}, {"mult", z.mult}});
  return j;
}

inline RootSpec spec_from_json(const json& j) {
  RootSpec spec;
  if (j.contains("lead")) spec.lead = parse_gauss_rat(j["lead"]);
  for (const auto& r : j.value("real_roots", json::array()))
    spec.real_roots.push_back(
        {parse_rat(r.at("value").get<std::string>()), r.at("mult").get<unsigned>()});
  for (const auto& q : j.value("quad_factors", json::array()))
    spec.quad_factors.push_back({parse_rat(q.at("b").get<std::string>()),
                                 parse_rat(q.at("c").get<std::string>()),
                                 q.at("mult").get<unsigned>()});
  for (const auto& z : j.value("complex_roots", json::array()))
    spec.complex_roots.push_back({parse_gauss_rat(z.at("value")), z.at("mult").get<unsigned>()});
  return spec;
}

}  // namespace rootcount

#endif
