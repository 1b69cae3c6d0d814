#pragma once

// Brute-force reference implementations used by the test suites. Nothing
// here calls into the library: words are std::vector<int>, relations are
// given as literal 4-tuples, and classes are closed with std::set.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using W = std::vector<int>;
using Rel = std::array<int, 4>;  // a b = c d, 0-based letters

struct Rules {
  int n = 0;
  std::map<std::pair<int, int>, std::pair<int, int>> swap;

  Rules(int gens, const std::vector<Rel>& rels) : n(gens) {
    for (const Rel& r : rels) {
      swap[{r[0], r[1]}] = {r[2], r[3]};
      swap[{r[2], r[3]}] = {r[0], r[1]};
    }
  }

  std::pair<int, int> rel(int a, int b) const {
    auto it = swap.find({a, b});
    return it == swap.end() ? std::pair{a, b} : it->second;
  }
};

inline std::set<W> orbit(const Rules& R, const W& w) {
  std::set<W> seen{w};
  std::vector<W> todo{w};
  while (!todo.empty()) {
    W cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto [c, d] = R.rel(cur[i], cur[i + 1]);
      W next = cur;
      next[i] = c;
      next[i + 1] = d;
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

inline W canonical(const Rules& R, const W& w) { return *orbit(R, w).begin(); }

inline bool equivalent(const Rules& R, const W& a, const W& b) {
  return a.size() == b.size() && orbit(R, a).count(b) > 0;
}

inline std::vector<W> all_words(int n, std::size_t m) {
  std::vector<W> out{W{}};
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<W> next;
    for (const W& w : out) {
      for (int x = 0; x < n; ++x) {
        W v = w;
        v.push_back(x);
        next.push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Canonical words of all classes of degree m, sorted.
inline std::vector<W> class_reps(const Rules& R, std::size_t m) {
  std::set<W> done;
  std::vector<W> reps;
  for (const W& w : all_words(R.n, m)) {
    if (done.count(w)) continue;
    auto o = orbit(R, w);
    reps.push_back(*o.begin());
    done.insert(o.begin(), o.end());
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

// v is u with one relation applied at one position.
inline bool is_step(const Rules& R, const W& u, const W& v) {
  if (u.size() != v.size() || u == v) return false;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    bool rest = true;
    for (std::size_t j = 0; j < u.size() && rest; ++j) rest = j == i || j == i + 1 || u[j] == v[j];
    if (rest && R.rel(u[i], u[i + 1]) == std::pair{v[i], v[i + 1]}) return true;
  }
  return false;
}

inline bool is_chain(const Rules& R, const std::vector<W>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!is_step(R, chain[i], chain[i + 1])) return false;
  }
  return !chain.empty();
}

inline std::set<int> left_divisors(const Rules& R, const W& w) {
  std::set<int> out;
  for (const W& u : orbit(R, w)) out.insert(u.front());
  return out;
}

inline W cat(W a, const W& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline W pw(int x, std::size_t k) { return W(k, x); }

// f_y(w) = the first |w| letters of g(y w), g sweeping left to right.
inline W f(const Rules& R, int y, const W& w) {
  W full = cat(W{y}, w);
  for (std::size_t i = 0; i + 1 < full.size(); ++i) {
    auto [c, d] = R.rel(full[i], full[i + 1]);
    full[i] = c;
    full[i + 1] = d;
  }
  full.pop_back();
  return full;
}

inline bool right_nondegenerate(const Rules& R) {
  for (int x = 0; x < R.n; ++x) {
    std::set<int> img;
    for (int y = 0; y < R.n; ++y) img.insert(R.rel(x, y).first);
    if (static_cast<int>(img.size()) != R.n) return false;
  }
  return true;
}

inline bool left_nondegenerate(const Rules& R) {
  for (int x = 0; x < R.n; ++x) {
    std::set<int> img;
    for (int y = 0; y < R.n; ++y) img.insert(R.rel(y, x).second);
    if (static_cast<int>(img.size()) != R.n) return false;
  }
  return true;
}

// Block labels of the relation "a w = b w for some w of degree 1..wmax" at
// degree m, closed transitively. Labels are indices into class_reps(R, m).
inline std::vector<int> rho_blocks(const Rules& R, std::size_t m, std::size_t wmax) {
  const auto reps = class_reps(R, m);
  std::vector<int> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      bool hit = false;
      for (std::size_t k = 1; k <= wmax && !hit; ++k) {
        for (const W& w : all_words(R.n, k)) {
          if (equivalent(R, cat(reps[i], w), cat(reps[j], w))) {
            hit = true;
            break;
          }
        }
      }
      if (hit) {
        const int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<int> out(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) out[i] = find(static_cast<int>(i));
  return out;
}

inline std::size_t block_count(const std::vector<int>& labels) {
  return std::set<int>(labels.begin(), labels.end()).size();
}

// Number of classes of degree m in a commutative monoid on n letters with
// extra binomial relations (exponent-vector rewriting).
inline std::size_t commutative_classes(int n, std::size_t m,
                                       const std::vector<std::pair<std::vector<int>, std::vector<int>>>& rels) {
  std::vector<std::vector<int>> vecs;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[i] = left;
      vecs.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, static_cast<int>(m));
  std::set<std::vector<int>> done;
  std::size_t count = 0;
  for (const auto& v : vecs) {
    if (done.count(v)) continue;
    ++count;
    std::vector<std::vector<int>> todo{v};
    done.insert(v);
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (const auto& [l, r] : rels) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& from = dir == 0 ? l : r;
          const auto& to = dir == 0 ? r : l;
          bool ok = true;
          for (int i = 0; i < n; ++i) ok = ok && x[i] >= from[i];
          if (!ok) continue;
          auto y = x;
          for (int i = 0; i < n; ++i) y[i] += to[i] - from[i];
          if (done.insert(y).second) todo.push_back(y);
        }
      }
    }
  }
  return count;
}

// Literal relation tables of the four built-in examples (0-based).
inline std::vector<Rel> ex_a() {
  return {{2, 1, 0, 3}, {3, 0, 1, 2}, {1, 0, 0, 1}, {2, 0, 0, 2}, {3, 1, 1, 3}, {3, 2, 2, 3}};
}
inline std::vector<Rel> ex_b() { return {{1, 0, 2, 0}, {0, 1, 2, 1}, {0, 2, 1, 2}}; }
inline std::vector<Rel> ex_c() {
  return {{3, 2, 0, 3}, {3, 1, 1, 3}, {3, 0, 2, 3}, {2, 1, 0, 2}, {2, 0, 1, 2}, {1, 0, 0, 1}};
}
inline std::vector<Rel> ex_d() {
  return {{1, 0, 0, 2}, {2, 0, 1, 3}, {3, 0, 0, 1}, {2, 1, 0, 3}, {3, 1, 1, 2}, {3, 2, 2, 3}};
}

}  // namespace oracle
