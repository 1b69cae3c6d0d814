#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skew/check.hpp"
#include "skew/engine.hpp"

namespace skew {

inline constexpr int report_schema_version = 1;

struct AnalysisOptions {
  std::size_t max_degree = 8;
  std::size_t witness_bound = 4;
  std::size_t N_max = 3;
  std::optional<std::size_t> rho_degree;  // default max(1, max_degree - witness_bound)
  std::string check;                      // run one verifier; empty runs all
  Budget budget;

  // Applies SKW_MAX_DEGREE and SKW_WITNESS_BOUND when set.
  void apply_environment();
  std::size_t effective_rho_degree() const;
};

// Names accepted by AnalysisOptions::check.
const std::vector<std::string>& check_names();

struct PresentationEcho {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  friend bool operator==(const PresentationEcho&, const PresentationEcho&) = default;
};

struct Flags {
  bool skew_valid = true;
  bool right_nondegenerate = false;
  bool left_nondegenerate = false;
  bool cyclic = false;
  std::optional<std::pair<std::string, std::string>> cyclic_counterexample;
  std::vector<std::string> right_failing;
  std::vector<std::string> left_failing;
  std::vector<std::string> normalizing;
  friend bool operator==(const Flags&, const Flags&) = default;
};

struct FcCycleRecord {
  std::vector<std::string> x;
  std::vector<std::string> y;
  bool verified = false;
  friend bool operator==(const FcCycleRecord&, const FcCycleRecord&) = default;
};

struct CosetRecord {
  std::size_t p = 1;
  std::size_t verified_degree = 0;
  std::vector<std::string> coset_reps;
  friend bool operator==(const CosetRecord&, const CosetRecord&) = default;
};

struct GrowthRecord {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> cumulative;
  double gk_estimate = 0.0;
  std::size_t gk_bound = 0;
  std::size_t fit_from = 0;
  friend bool operator==(const GrowthRecord&, const GrowthRecord&) = default;
};

struct RhoPairRecord {
  std::string a;
  std::string b;
  std::optional<std::string> witness;
  friend bool operator==(const RhoPairRecord&, const RhoPairRecord&) = default;
};

struct ProbeRecord {
  std::string base;
  std::size_t N = 1;
  std::string element;
  bool regime_verified = false;
  friend bool operator==(const ProbeRecord&, const ProbeRecord&) = default;
};

struct TowerRecord {
  std::vector<std::vector<std::uint64_t>> class_counts;  // per level, by degree
  std::vector<std::uint64_t> pair_counts;
  std::optional<std::size_t> stabilized_at;
  bool budget_hit = false;
  friend bool operator==(const TowerRecord&, const TowerRecord&) = default;
};

struct RhoRecord {
  std::size_t degree_bound = 0;
  std::size_t witness_bound = 0;
  bool single_step = false;
  bool budget_hit = false;
  std::string warning;
  std::optional<ProbeRecord> probe;
  std::vector<RhoPairRecord> pairs;
  std::vector<std::pair<std::string, std::string>> generators;
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> class_counts;
  std::optional<TowerRecord> tower;
  friend bool operator==(const RhoRecord&, const RhoRecord&) = default;
};

struct BudgetRecord {
  std::size_t max_degree = 0;
  std::size_t witness_bound = 0;
  std::size_t N_max = 0;
  std::size_t rho_degree = 0;
  std::uint64_t max_table_words = 0;
  friend bool operator==(const BudgetRecord&, const BudgetRecord&) = default;
};

struct AnalysisReport {
  int schema_version = report_schema_version;
  PresentationEcho presentation;
  Flags flags;
  std::vector<FcCycleRecord> fc_cycles;
  std::optional<std::size_t> commuting_exponent;
  std::optional<CosetRecord> coset_decomposition;
  std::optional<GrowthRecord> growth;
  std::vector<CheckReport> checks;
  std::optional<RhoRecord> rho;
  BudgetRecord budgets;
  std::vector<std::string> notes;
  CheckStatus overall = CheckStatus::budget_exhausted;

  const CheckReport* find_check(const std::string& name) const;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport run_analysis(const Presentation& P, const AnalysisOptions& options);

std::string report_to_json(const AnalysisReport& report, int indent = 2);
AnalysisReport report_from_json(const std::string& text);

}  // namespace skew
