#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "skew/presentation.hpp"

namespace skew {

// Words of a fixed degree m are indexed by their base-n value with the first
// letter most significant, so numeric order is lexicographic order.
using WordIndex = std::uint64_t;
using ClassId = std::uint32_t;

struct Budget {
  std::uint64_t max_table_words = std::uint64_t{1} << 22;
  std::uint64_t max_orbit_words = std::uint64_t{1} << 22;
};

// Partition of X^m into congruence classes. Classes are numbered in
// increasing order of their canonical (lexicographically least) word.
class ClassTable {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t count() const { return reps_.size(); }
  std::uint64_t word_count() const { return class_of_.size(); }

  ClassId class_of(WordIndex w) const { return class_of_[w]; }
  WordIndex rep(ClassId c) const { return reps_[c]; }
  std::size_t class_size(ClassId c) const { return offsets_[c + 1] - offsets_[c]; }
  std::span<const WordIndex> members(ClassId c) const {
    return {members_.data() + offsets_[c], members_.data() + offsets_[c + 1]};
  }
  GeneratorSet left_div(ClassId c) const { return left_div_[c]; }
  GeneratorSet right_div(ClassId c) const { return right_div_[c]; }

 private:
  friend class WordEngine;
  std::size_t degree_ = 0;
  std::vector<ClassId> class_of_;
  std::vector<WordIndex> reps_;
  std::vector<std::size_t> offsets_;
  std::vector<WordIndex> members_;
  std::vector<GeneratorSet> left_div_;
  std::vector<GeneratorSet> right_div_;
};

// The graded word-congruence engine. Class tables are built on demand and
// memoized; all queries are safe to call concurrently.
class WordEngine {
 public:
  explicit WordEngine(Presentation presentation, Budget budget = {});

  const Presentation& presentation() const { return presentation_; }
  std::size_t generators() const { return presentation_.size(); }
  const Budget& budget() const { return budget_; }

  // `pos` is 0-based: rewrites letters pos, pos+1.
  Word apply_relation_at(const Word& w, std::size_t pos) const;
  // g = g_{m-1} ... g_1, applied left to right.
  Word apply_g(const Word& w) const;
  // f_y(w): the first |w| letters of g(y w).
  Word apply_f(Letter y, const Word& w) const;
  // Order of the permutation f_y on X^{m-1}.
  std::uint64_t f_order(Letter y, std::size_t m) const;

  std::vector<Word> orbit(const Word& w) const;
  Word canonical_form(const Word& w) const;
  bool equivalent(const Word& a, const Word& b) const;
  // Like equivalent(), but builds the class table first when its degree fits
  // the budget. Use for sweeps that compare many words of one degree.
  bool congruent(const Word& a, const Word& b) const;

  bool table_within_budget(std::size_t degree) const;
  const ClassTable& classes(std::size_t degree) const;

  WordIndex index_of(const Word& w) const;
  Word word_at(WordIndex index, std::size_t degree) const;
  // n^degree, saturating at UINT64_MAX.
  std::uint64_t words_of_degree(std::size_t degree) const;

  ClassId class_of(const Word& w) const { return classes(w.size()).class_of(index_of(w)); }
  Word rep_word(std::size_t degree, ClassId c) const { return word_at(classes(degree).rep(c), degree); }
  // Class of the product of two classes.
  ClassId product(std::size_t d1, ClassId a, std::size_t d2, ClassId b) const;
  GeneratorSet left_divisors(const Word& w) const;
  GeneratorSet right_divisors(const Word& w) const;

 private:
  std::unique_ptr<ClassTable> build_table(std::size_t degree) const;

  Presentation presentation_;
  Budget budget_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<ClassTable>> tables_;
};

}  // namespace skew
