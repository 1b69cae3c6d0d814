#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace skew {

// Generators are 0-based internally; declaration order in the presentation
// file is the order used for canonical forms.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t max_generators = 32;

inline Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline Word power(Letter x, std::size_t k) { return Word(k, x); }

// A subset of the generating set, stored as a bitmask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}

  static GeneratorSet all(std::size_t n) {
    return GeneratorSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr void insert(Letter x) { bits_ |= std::uint32_t{1} << x; }
  constexpr bool contains(Letter x) const { return (bits_ >> x) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Letter>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace skew
