#pragma once

// JSON rendering of analysis reports. Key order is fixed (nlohmann::ordered_json)
// so that equal reports serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "hvec/analysis.hpp"
#include "hvec/parse.hpp"

namespace hvec {

using Json = nlohmann::ordered_json;

inline Json to_json(const CheckRecord& rec) {
  Json rows = Json::array();
  for (const auto& r : rec.rows)
    rows.push_back(Json{{"degree", r.degree}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok}});
  Json values = Json::object();
  for (const auto& [k, v] : rec.values) values[k] = v;
  return Json{{"name", rec.name}, {"status", to_string(rec.status)}, {"note", rec.note},
              {"rows", std::move(rows)}, {"values", std::move(values)}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const AnalysisReport& report, const std::vector<std::string>& names) {
  Json j;
  j["label"] = report.label;
  j["characteristic"] = report.characteristic;
  j["seed"] = report.seed;
  j["h_vector"] = report.h_vector.values();
  j["socle_degree"] = optional_json(report.socle_degree);
  const auto& p = report.predicates;
  j["predicates"] = Json{{"artinian", report.h_vector.is_artinian()},
                         {"o_sequence", p.o_sequence},
                         {"symmetric", optional_json(p.symmetric)},
                         {"unimodal", optional_json(p.unimodal)},
                         {"si_sequence", optional_json(p.si_sequence)},
                         {"gorenstein_consistent", p.gorenstein_consistent}};
  j["maximal_growth_degrees"] = report.maximal_growth_degrees;
  j["generator_degrees"] = report.generator_degrees;

  const auto& r = report.reduction;
  Json red;
  Json forms = Json::array();
  for (const auto& l : r.forms) forms.push_back(l.to_string(names));
  red["forms"] = std::move(forms);
  red["seed"] = optional_json(r.seed);
  red["f_vector"] = r.f_vector.values();
  red["initial_degree_a"] = optional_json(r.initial_degree_a);
  red["second_gap_m"] = optional_json(r.second_gap_m);
  red["maximal_growth_degrees"] = r.maximal_growth_degrees;
  red["genericity_confirmed"] = r.genericity_confirmed;
  red["validation_seed"] = r.validation_seed;
  red["error"] = optional_json(r.error);
  j["reduction"] = std::move(red);

  Json gcds = Json::array();
  for (const auto& g : report.gcd_findings)
    gcds.push_back(Json{{"degree", g.degree_t},
                        {"gcd", g.is_unit() ? std::string("1") : g.gcd_poly->to_string(names)},
                        {"gcd_degree", g.gcd_degree},
                        {"unit", g.is_unit()},
                        {"triggers", g.triggers}});
  j["gcd_findings"] = std::move(gcds);

  Json checks = Json::array();
  for (const auto& c : report.lemma_checks) checks.push_back(to_json(c));
  j["lemma_checks"] = std::move(checks);

  Json timings = Json::object();
  for (const auto& [k, v] : report.timings_ms) timings[k] = v;
  j["timings_ms"] = std::move(timings);
  j["errors"] = report.errors;
  return j;
}

inline Json to_json(const AnalysisReport& report, int nvars) {
  return to_json(report, default_variable_names(nvars));
}

}  // namespace hvec
