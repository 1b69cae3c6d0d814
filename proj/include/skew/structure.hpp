#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skew/check.hpp"
#include "skew/engine.hpp"

namespace skew {

// Left and right divisors of an element, read off its whole class: x divides
// s on the left iff some word of the class starts with x.
struct DivisorProfile {
  Word canonical;
  GeneratorSet left_div;
  GeneratorSet right_div;
  std::size_t level() const { return left_div.size(); }
  std::size_t co_level() const { return right_div.size(); }
};

DivisorProfile divisor_profile(const WordEngine& engine, const Word& w);

// s in D_Y iff the left divisors of s are exactly Y.
bool in_DY(const WordEngine& engine, const Word& w, GeneratorSet Y);

// Ideal property of S_i (level never drops under multiplication by a
// generator), strict increase when x is not a left divisor, and
// D_{y} = {y^m} at every degree.
CheckReport verify_ideal_chain(const WordEngine& engine, std::size_t m_max);

// Every class has a representative y_1^{a_1} ... y_k^{a_k} with k <= n blocks.
// With `fixed_order` the blocks must follow generator order x_1, ..., x_n.
CheckReport verify_monomial_decomposition(const WordEngine& engine, std::size_t m_max,
                                          bool fixed_order = false);

struct GrowthReport {
  std::vector<std::uint64_t> counts;      // counts[m-1] = classes of degree m
  std::vector<std::uint64_t> cumulative;  // cumulative[m-1] = classes of degree <= m, identity included
  double gk_estimate = 0.0;               // log-log slope over the top half of 1..m_max
  std::size_t gk_bound = 0;
  std::size_t fit_from = 0;               // first degree used in the slope fit
};

GrowthReport growth_report(const WordEngine& engine, std::size_t m_max);

struct OverJumpWitness {
  Word a;
  Letter i = 0;
  std::size_t k = 0;
  Word w;  // a w = x_i^k a, |w| = k
};

// Least k <= k_max (then lexicographically least w) with a w = x_i^k a.
std::optional<OverJumpWitness> over_jump_witness(const WordEngine& engine, const Word& a,
                                                 Letter i, std::size_t k_max);

// The witness built by iterating f_{x_i} r times, r = f_order(x_i, |a| + 1).
// `derivation` is the chain of single-relation rewrites from x_i^r a to a w.
struct OverJumpConstruction {
  OverJumpWitness witness;
  std::vector<Word> derivation;
};
OverJumpConstruction construct_over_jump(const WordEngine& engine, const Word& a, Letter i);

// True iff consecutive words differ by one relation application at one position.
bool is_derivation(const Presentation& P, const std::vector<Word>& chain);

// w, t with |w| = |y| and x w = y t, built by induction on |x|.
std::pair<Word, Word> division_witness(const WordEngine& engine, const Word& x, const Word& y);

struct ClaimLemmaOptions {
  std::size_t q_max = 8;        // degree bound on the products
  std::size_t sample = 100000;  // cap on the number of elements certified
};

// (S_{i-1})^k cap D_Y is contained in bS and (S_{i-1})^{k+1} cap D_Y in b S_{i-1},
// where |Y| = i - 1, b in D_Z for some Z subset of Y, k = |b|.
CheckReport verify_claim_lemma(const WordEngine& engine, GeneratorSet Y, const Word& b,
                               ClaimLemmaOptions options = {});

// S_k^k subset S_k' and (S_k')^k subset S_k for k = 2..n, on products of
// degree <= m_max.
CheckReport verify_power_inclusion(const WordEngine& engine, std::size_t m_max);

struct CancellativeIdealResult {
  std::optional<std::size_t> exponent;
  CheckReport report;  // for the returned exponent
};

// Least N <= N_max for which S_X^N is cancellative on all instances a z, z a
// with a, b, z in S_X^N and |a| + |z| <= m_max.
CancellativeIdealResult cancellative_ideal_exponent(const WordEngine& engine, std::size_t m_max,
                                                    std::size_t N_max);

// Classes of S_X^N at degrees 0..max_degree: members[d] lists the class ids.
std::vector<std::vector<ClassId>> ideal_power_classes(const WordEngine& engine, std::size_t N,
                                                      std::size_t max_degree);

// x s in S x and s x in x S for every generator s, then spot-checked for
// every class of degree < m_max.
bool is_normalizing(const WordEngine& engine, Letter x, std::size_t m_max);

}  // namespace skew
