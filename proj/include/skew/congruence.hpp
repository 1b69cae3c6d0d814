#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skew/check.hpp"
#include "skew/engine.hpp"

namespace skew {

enum class RhoDecision { equivalent, no_witness, decided_negative };
const char* to_string(RhoDecision d) noexcept;

struct RhoResult {
  RhoDecision decision = RhoDecision::no_witness;
  std::optional<Word> witness;  // least by degree, then lexicographically
  bool by_probe = false;        // the fixed probe decided the answer
  std::string warning;
};

// c^N for some c with left divisors X. `regime_verified` is set when S_X^N
// was certified cancellative within the search degree.
struct Probe {
  Word base;
  std::size_t N = 1;
  Word element;
  bool regime_verified = false;
};

struct RhoPair {
  Word a;
  Word b;
  std::optional<Word> witness;  // a w = b w; absent only for degenerate presentations
  friend bool operator==(const RhoPair&, const RhoPair&) = default;
};

using WordPair = std::pair<Word, Word>;

struct CongruenceReport {
  std::size_t degree_bound = 0;
  std::size_t witness_bound = 0;
  std::vector<RhoPair> pairs;                    // consecutive members of each rho-class
  std::vector<std::uint64_t> rho_class_counts;  // indexed by degree 0..degree_bound
  std::vector<std::uint64_t> class_counts;
  std::vector<WordPair> generating_pairs;
  bool single_step = false;  // degenerate presentation: one-witness semantics only
  bool budget_hit = false;
  std::string warning;
  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

struct TowerLevel {
  std::vector<std::uint64_t> class_counts;  // rho_k classes by degree 0..m
  std::uint64_t pair_count = 0;             // sum over degrees of (classes - rho_k classes)
  friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

struct RhoTower {
  std::size_t degree_bound = 0;
  std::vector<TowerLevel> levels;          // levels[k-1] is rho_k
  std::optional<std::size_t> stabilized_at;  // least k with rho_k = rho_{k+1} at degree <= m
  bool budget_hit = false;
  std::vector<std::vector<ClassId>> last;  // labels of the deepest level, degrees 0..m
  friend bool operator==(const RhoTower&, const RhoTower&) = default;
};

// Per-degree labels: label[d][c] is the least class id in c's block.
using Partition = std::vector<std::vector<ClassId>>;

enum class Side { right, left };

class CongruenceAnalyzer {
 public:
  // `probe_degree` and `N_max` bound the cancellativity search for the probe.
  CongruenceAnalyzer(const WordEngine& engine, std::size_t witness_bound,
                     std::size_t N_max = 3, std::size_t probe_degree = 8);

  const WordEngine& engine() const { return engine_; }
  std::size_t witness_bound() const { return w_max_; }
  bool single_step() const { return single_step_; }
  const std::optional<Probe>& probe() const { return probe_; }

  RhoResult rho_equivalent(const Word& a, const Word& b) const;

  // Least w of degree <= bound with a w = b w (or w a = w b).
  std::optional<Word> direct_witness(const Word& a, const Word& b, Side side,
                                     std::size_t bound) const;

  CongruenceReport rho_classes(std::size_t m) const;
  std::vector<WordPair> rho_generating_pairs(std::size_t m) const;
  Partition rho_partition(std::size_t m) const;

  // Found pairs annihilate every class of S_X^N on both sides, and
  // non-pairs fail on some probe; products limited to `total_degree`.
  CheckReport annihilator_check(std::size_t m, std::size_t N, std::size_t total_degree = 8) const;

  RhoTower rho_tower(std::size_t m, std::size_t depth) const;

  // Congruence generated by `pairs`, restricted to degrees <= m.
  Partition closure(const std::vector<WordPair>& pairs, std::size_t m) const;

 private:
  Probe build_probe(std::size_t N_max, std::size_t probe_degree) const;
  bool fits(std::size_t degree) const { return engine_.table_within_budget(degree); }

  const WordEngine& engine_;
  std::size_t w_max_;
  bool single_step_;
  std::optional<Probe> probe_;
};

}  // namespace skew
