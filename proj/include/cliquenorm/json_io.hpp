#pragma once

#include <json.hpp>

#include "cliquenorm/bounds.hpp"
#include "cliquenorm/harness.hpp"

// nlohmann adapters so BoundResult and VerificationReport round-trip through
// their --json representations.

namespace cliquenorm {

inline void to_json(nlohmann::json& j, const BoundResult& r) {
  j = nlohmann::json{
      {"regime", r.regime == Regime::subcritical ? "subcritical"
                                                 : "supercritical"},
      {"u", r.u},
      {"s_real", nullptr},
      {"s_int", nullptr},
      {"bound", r.bound},
  };
  if (r.s_real) j["s_real"] = *r.s_real;
  if (r.s_int) j["s_int"] = *r.s_int;
}

inline void from_json(const nlohmann::json& j, BoundResult& r) {
  r.regime = j.at("regime").get<std::string>() == "subcritical"
                 ? Regime::subcritical
                 : Regime::supercritical;
  r.u = j.at("u").get<double>();
  r.s_real.reset();
  r.s_int.reset();
  if (!j.at("s_real").is_null()) r.s_real = j.at("s_real").get<double>();
  if (!j.at("s_int").is_null()) r.s_int = j.at("s_int").get<long long>();
  r.bound = j.at("bound").get<double>();
}

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"instance", v.instance},
                     {"p", v.p},
                     {"count", v.count},
                     {"bound", v.bound},
                     {"norm", v.norm}};
}

inline void from_json(const nlohmann::json& j, Violation& v) {
  j.at("instance").get_to(v.instance);
  j.at("p").get_to(v.p);
  j.at("count").get_to(v.count);
  j.at("bound").get_to(v.bound);
  j.at("norm").get_to(v.norm);
}

inline void to_json(nlohmann::json& j, const PerPStat& s) {
  j = nlohmann::json{
      {"p", s.p}, {"max_ratio", s.max_ratio}, {"witness", s.witness}};
}

inline void from_json(const nlohmann::json& j, PerPStat& s) {
  j.at("p").get_to(s.p);
  j.at("max_ratio").get_to(s.max_ratio);
  j.at("witness").get_to(s.witness);
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"suite", r.suite},
                     {"instances_checked", r.instances_checked},
                     {"violation_count", r.violation_count},
                     {"violations", r.violations},
                     {"max_ratio", r.max_ratio},
                     {"witness", r.witness},
                     {"per_p", r.per_p},
                     {"precondition_met", r.precondition_met},
                     {"elapsed_seconds", r.elapsed_seconds}};
}

inline void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("suite").get_to(r.suite);
  j.at("instances_checked").get_to(r.instances_checked);
  j.at("violation_count").get_to(r.violation_count);
  j.at("violations").get_to(r.violations);
  j.at("max_ratio").get_to(r.max_ratio);
  j.at("witness").get_to(r.witness);
  j.at("per_p").get_to(r.per_p);
  j.at("precondition_met").get_to(r.precondition_met);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
}

}  // namespace cliquenorm
