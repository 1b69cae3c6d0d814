#include <json.hpp>
#include <optional>

#include "skew/error.hpp"
#include "skew/report.hpp"

// Absent values serialize as null.
namespace nlohmann {
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};
}  // namespace nlohmann

namespace skew {

NLOHMANN_JSON_SERIALIZE_ENUM(CheckStatus, {
                                              {CheckStatus::verified, "verified"},
                                              {CheckStatus::violated, "violated"},
                                              {CheckStatus::budget_exhausted, "budget_exhausted"},
                                          })

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckReport, name, status, checked, violation_count, violations,
                                   note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PresentationEcho, generators, relations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Flags, skew_valid, right_nondegenerate, left_nondegenerate,
                                   cyclic, cyclic_counterexample, right_failing, left_failing,
                                   normalizing)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FcCycleRecord, x, y, verified)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CosetRecord, p, verified_degree, coset_reps)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GrowthRecord, counts, cumulative, gk_estimate, gk_bound, fit_from)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RhoPairRecord, a, b, witness)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProbeRecord, base, N, element, regime_verified)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TowerRecord, class_counts, pair_counts, stabilized_at, budget_hit)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BudgetRecord, max_degree, witness_bound, N_max, rho_degree,
                                   max_table_words)

void to_json(nlohmann::json& j, const RhoRecord& r) {
  j = {{"degree_bound", r.degree_bound},
       {"witness_bound", r.witness_bound},
       {"single_step", r.single_step},
       {"budget_hit", r.budget_hit},
       {"warning", r.warning},
       {"probe", r.probe},
       {"rho_pairs", r.pairs},
       {"rho_generators", r.generators},
       {"rho_counts", r.counts},
       {"class_counts", r.class_counts},
       {"tower", r.tower}};
}

void from_json(const nlohmann::json& j, RhoRecord& r) {
  j.at("degree_bound").get_to(r.degree_bound);
  j.at("witness_bound").get_to(r.witness_bound);
  j.at("single_step").get_to(r.single_step);
  j.at("budget_hit").get_to(r.budget_hit);
  j.at("warning").get_to(r.warning);
  j.at("probe").get_to(r.probe);
  j.at("rho_pairs").get_to(r.pairs);
  j.at("rho_generators").get_to(r.generators);
  j.at("rho_counts").get_to(r.counts);
  j.at("class_counts").get_to(r.class_counts);
  j.at("tower").get_to(r.tower);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, schema_version, presentation, flags, fc_cycles,
                                   commuting_exponent, coset_decomposition, growth, checks, rho,
                                   budgets, notes, overall)

std::string report_to_json(const AnalysisReport& report, int indent) {
  return nlohmann::json(report).dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    const int version = j.at("schema_version").get<int>();
    if (version != report_schema_version) {
      throw Error(ErrorCode::invalid_argument,
                  "unsupported report schema version " + std::to_string(version));
    }
    return j.get<AnalysisReport>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::syntax, std::string("malformed report: ") + e.what());
  }
}

}  // namespace skew
