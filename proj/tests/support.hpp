#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "skew/presentation.hpp"

namespace support {

inline std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

inline skew::Presentation make(int n, const std::vector<oracle::Rel>& rels) {
  std::vector<std::pair<skew::Monomial, skew::Monomial>> r;
  for (const auto& q : rels) {
    r.push_back({{static_cast<skew::Letter>(q[0]), static_cast<skew::Letter>(q[1])},
                 {static_cast<skew::Letter>(q[2]), static_cast<skew::Letter>(q[3])}});
  }
  return skew::Presentation(names(n), r);
}

inline std::vector<oracle::Rel> commuting(int n) {
  std::vector<oracle::Rel> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.push_back({j, i, i, j});
  }
  return out;
}

// A uniformly random perfect matching on the off-diagonal monomials.
inline std::vector<oracle::Rel> random_rels(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> monos;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p != q) monos.push_back({p, q});
    }
  }
  std::shuffle(monos.begin(), monos.end(), rng);
  std::vector<oracle::Rel> out;
  for (std::size_t i = 0; i + 1 < monos.size(); i += 2) {
    out.push_back({monos[i].first, monos[i].second, monos[i + 1].first, monos[i + 1].second});
  }
  return out;
}

inline skew::Word to_word(const oracle::W& w) { return skew::Word(w.begin(), w.end()); }
inline oracle::W from_word(const skew::Word& w) { return oracle::W(w.begin(), w.end()); }

}  // namespace support
