#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skew/word.hpp"

namespace skew {

struct Monomial {
  Letter first;
  Letter second;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Image table of f_x (right) or its left dual. Not necessarily a permutation.
struct GeneratorMap {
  Letter source;
  std::vector<Letter> table;

  bool is_permutation() const;
};

struct DegeneracyResult {
  bool holds = true;
  std::vector<Letter> failing;  // generators whose map is not a bijection
};

// A monoid presentation of skew type: n generators and an involutive
// matching on the off-diagonal monomials x_p x_q. The diagonal is extended
// by the trivial relation xx = xx so that rel() is total.
class Presentation {
 public:
  // `relations` lists each unordered relation once; validation is the same as
  // for parsed text.
  Presentation(std::vector<std::string> names,
               const std::vector<std::pair<Monomial, Monomial>>& relations);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Letter x) const { return names_[x]; }
  std::optional<Letter> find(std::string_view name) const;

  Monomial rel(Letter p, Letter q) const { return rel_[p * size() + q]; }
  bool relates(Letter a, Letter b, Letter c, Letter d) const {
    return rel(a, b) == Monomial{c, d};
  }

  // One entry per unordered relation, in first-seen order, oriented as written.
  const std::vector<std::pair<Monomial, Monomial>>& relations() const { return relations_; }

  GeneratorMap right_map(Letter x) const;
  GeneratorMap left_map(Letter x) const;
  DegeneracyResult right_nondegenerate() const;
  DegeneracyResult left_nondegenerate() const;
  bool is_right_nondegenerate() const { return right_nondegenerate().holds; }
  bool is_left_nondegenerate() const { return left_nondegenerate().holds; }

  std::string format_word(const Word& w) const;
  // Whitespace separated tokens, `x2^3` exponent shorthand accepted.
  Word parse_word(std::string_view text) const;
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Monomial> rel_;
  std::vector<std::pair<Monomial, Monomial>> relations_;
};

Presentation parse_presentation(std::string_view text);

}  // namespace skew
