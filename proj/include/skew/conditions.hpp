#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skew/check.hpp"
#include "skew/engine.hpp"

namespace skew {

struct CyclicResult {
  bool holds = true;
  // First (x, y) in generator order whose x-orbit under y does not close
  // with a constant right letter.
  std::optional<std::pair<Letter, Letter>> counterexample;
};

// A cycle of type k x p: y_j x_i = x_{i+1} y_{j+1} for all i mod k, j mod p.
struct FcCycle {
  std::vector<Letter> x_seq;
  std::vector<Letter> y_seq;

  std::size_t k() const { return x_seq.size(); }
  std::size_t p() const { return y_seq.size(); }
  // Checks all k*p relation instances against the presentation.
  bool verify(const Presentation& P) const;

  friend bool operator==(const FcCycle&, const FcCycle&) = default;
};

CyclicResult check_cyclic(const Presentation& P);

// Follows the constructive proof: the internal x-cycle under y, then the
// successive lifts y^(1), y^(2), ... until the y-cycle closes.
// Throws Error(internal) if closure is not reached.
FcCycle build_fc_cycle(const Presentation& P, Letter x, Letter y);

// All distinct FC cycles over ordered pairs (x, y), in first-seen order.
std::vector<FcCycle> all_fc_cycles(const Presentation& P);

inline constexpr std::size_t default_exponent_limit = 12;

// Least p <= limit with x_i^p x_j^p = x_j^p x_i^p for all i, j.
std::optional<std::size_t> commuting_exponent(const WordEngine& engine,
                                              std::size_t limit = default_exponent_limit);

struct CosetDecomposition {
  std::size_t p = 1;
  std::size_t verified_degree = 0;
  std::vector<Word> coset_reps;  // x_1^{i_1} ... x_n^{i_n}, all i_j < p
  CheckReport coverage;          // every class lies in some cA
  CheckReport commutation;       // cA = Ac at each degree
};

CosetDecomposition coset_decomposition(const WordEngine& engine, std::size_t p,
                                       std::size_t max_degree);

}  // namespace skew
