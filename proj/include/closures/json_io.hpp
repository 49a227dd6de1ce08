// JSON renderings of the library's result types (schema_version 1).
// Certificates keep exact rational strings; coordinates are 1-based in the
// serialized form.
#ifndef CLOSURES_JSON_IO_HPP
#define CLOSURES_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "closures/framework.hpp"
#include "closures/frobenius.hpp"
#include "closures/grammar.hpp"
#include "closures/newton.hpp"

namespace closures {

using nlohmann::json;

inline json to_json(const ConvexCertificate& cert) {
  json j;
  j["coefficients"] = json::array();
  for (const auto& c : cert.coefficients) j["coefficients"].push_back(to_string(c));
  if (cert.strict_coordinate) j["strict_coordinate"] = *cert.strict_coordinate + 1;
  return j;
}

inline ConvexCertificate certificate_from_json(const json& j) {
  ConvexCertificate cert;
  for (const auto& c : j.at("coefficients")) cert.coefficients.push_back(rational_from_string(c.get<std::string>()));
  if (j.contains("strict_coordinate"))
    cert.strict_coordinate = j.at("strict_coordinate").get<std::size_t>() - 1;
  return cert;
}

inline json to_json(const MembershipResult& result) {
  json j;
  j["verdict"] = result.in() ? "In" : "NotIn";
  if (result.certificate) j["certificate"] = to_json(*result.certificate);
  return j;
}

inline json to_json(const BoundedVerdict& verdict) {
  json j;
  if (verdict.in()) {
    j["verdict"] = "In";
    j["e"] = verdict.witness->e;
    j["kind"] = verdict.witness->kind == WitnessKind::Closure ? "Closure" : "SpecialPart";
  } else {
    j["verdict"] = "NotInUpTo";
    j["e_max"] = verdict.e_max;
  }
  return j;
}

inline json to_json(const SpreadTable& table) {
  json j;
  j["e"] = json::array();
  j["mu"] = json::array();
  for (std::size_t e = 0; e < table.mu.size(); ++e) {
    j["e"].push_back(e);
    j["mu"].push_back(table.mu[e]);
  }
  j["stable"] = table.stable;
  return j;
}

inline json to_json(const ExponentVector& alpha, const std::vector<std::string>& names) {
  json j;
  j["monomial"] = format_monomial(alpha, names);
  j["exponents"] = json::array();
  for (std::size_t i = 0; i < alpha.size(); ++i) j["exponents"].push_back(alpha[i].get_str());
  return j;
}

inline json to_json(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  json j;
  j["generators"] = json::array();
  for (const auto& g : ideal.generators()) j["generators"].push_back(format_monomial(g, names));
  j["text"] = format_ideal(ideal, names);
  return j;
}

inline json to_json(const AxiomReport& report) {
  json j;
  j["instances"] = report.instances;
  j["axioms"] = json::array();
  for (const auto& check : report.checks) {
    json c;
    c["axiom"] = check.axiom;
    c["passed"] = check.passed;
    if (check.witness) c["witness"] = *check.witness;
    j["axioms"].push_back(c);
  }
  j["all_passed"] = report.all_passed();
  return j;
}

inline const char* to_text(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::Holds: return "holds";
    case ConditionStatus::Fails: return "fails";
    default: return "holds up to bound";
  }
}

inline json to_json(const EvolutionReport& report, const std::vector<std::string>& names) {
  json j;
  j["SP"] = to_text(report.sp);
  j["AR"] = to_text(report.ar);
  j["NN"] = to_text(report.nn);
  j["bar_independent"] = report.bar_independent;
  if (report.sp_witness) j["SP_witness"] = format_monomial(*report.sp_witness, names);
  if (report.ar_witness)
    j["AR_witness"] = {{"monomial", format_monomial(report.ar_witness->first, names)},
                       {"n", report.ar_witness->second}};
  if (report.nn_witness)
    j["NN_witness"] = {{"monomial", format_monomial(report.nn_witness->first, names)},
                       {"n", report.nn_witness->second}};
  return j;
}

inline json to_json(const BriancosSkodaReport& report, const std::vector<std::string>& names) {
  json j;
  j["generator_count"] = report.generator_count;
  j["w"] = report.w;
  j["special_containment"] = report.special_containment;
  j["integral_containment"] = report.integral_containment;
  j["special_violations"] = json::array();
  for (const auto& v : report.special_violations)
    j["special_violations"].push_back(format_monomial(v, names));
  j["integral_violations"] = json::array();
  for (const auto& v : report.integral_violations)
    j["integral_violations"].push_back(format_monomial(v, names));
  return j;
}

inline json to_json(const std::vector<StaircaseFacet>& facets) {
  json j = json::array();
  for (const auto& f : facets)
    j.push_back({{"normal", {f.normal_x.get_str(), f.normal_y.get_str()}},
                 {"value", f.value.get_str()}});
  return j;
}

inline json to_json(const ReesEquivalenceReport& report, const std::vector<std::string>& names) {
  json j;
  j["points"] = report.points;
  j["agreements"] = report.agreements;
  j["bound_insufficient"] = json::array();
  for (const auto& a : report.bound_insufficient)
    j["bound_insufficient"].push_back(format_monomial(a, names));
  j["contradictions"] = json::array();
  for (const auto& a : report.contradictions)
    j["contradictions"].push_back(format_monomial(a, names));
  return j;
}

}  // namespace closures

#endif
