#include "skew/conditions.hpp"

#include <algorithm>
#include <set>

#include "skew/error.hpp"

namespace skew {

namespace {

// The x-orbit under left multiplication by y: y x_i = x_{i+1} z with constant z.
struct InternalCycle {
  std::vector<Letter> xs;
  Letter z = 0;
  bool closed = false;
};

InternalCycle internal_cycle(const Presentation& P, Letter x, Letter y) {
  InternalCycle cycle;
  Letter cur = x;
  for (std::size_t step = 0; step < P.size(); ++step) {
    cycle.xs.push_back(cur);
    const Monomial m = P.rel(y, cur);
    if (step == 0) {
      cycle.z = m.second;
    } else if (m.second != cycle.z) {
      return cycle;
    }
    cur = m.first;
    if (cur == x) {
      cycle.closed = true;
      return cycle;
    }
  }
  return cycle;
}

std::vector<Letter> rotate_min_first(std::vector<Letter> v) {
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  return v;
}

// x_1^{i_1} ... x_n^{i_n} with every run shorter than p, letters nondecreasing.
bool is_coset_prefix(std::span<const Letter> w, std::size_t p) {
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] < w[i - 1]) return false;
    run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

// A product of blocks x_j^p: every maximal run has length divisible by p.
bool is_power_product(std::span<const Letter> w, std::size_t p) {
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if ((j - i) % p != 0) return false;
    i = j;
  }
  return true;
}

bool in_coset_form(const Word& w, std::size_t p) {
  std::span<const Letter> all(w);
  for (std::size_t split = 0; split <= w.size(); ++split) {
    if (is_coset_prefix(all.first(split), p) && is_power_product(all.subspan(split), p)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool FcCycle::verify(const Presentation& P) const {
  if (x_seq.empty() || y_seq.empty()) return false;
  for (std::size_t j = 0; j < p(); ++j) {
    for (std::size_t i = 0; i < k(); ++i) {
      if (!P.relates(y_seq[j], x_seq[i], x_seq[(i + 1) % k()], y_seq[(j + 1) % p()])) {
        return false;
      }
    }
  }
  return true;
}

CyclicResult check_cyclic(const Presentation& P) {
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t y = 0; y < P.size(); ++y) {
      if (!internal_cycle(P, static_cast<Letter>(x), static_cast<Letter>(y)).closed) {
        return {false, std::pair{static_cast<Letter>(x), static_cast<Letter>(y)}};
      }
    }
  }
  return {};
}

FcCycle build_fc_cycle(const Presentation& P, Letter x, Letter y) {
  const InternalCycle inner = internal_cycle(P, x, y);
  if (!inner.closed) {
    throw Error(ErrorCode::precondition, "the cyclic condition fails for (" + P.name(x) + ", " +
                                             P.name(y) + ")");
  }
  const std::size_t k = inner.xs.size();
  const Letter x2 = inner.xs[1 % k];

  // y^(j+1) x_1 = x_2 y^(j); the lifts walk the y-cycle backwards.
  std::vector<Letter> lifts;
  Letter prev = y;
  bool closed = false;
  for (std::size_t step = 0; step < P.size(); ++step) {
    const Monomial m = P.rel(x2, prev);
    if (m.second != x) {
      throw Error(ErrorCode::internal, "lift of " + P.name(prev) + " does not end in " + P.name(x));
    }
    if (m.first == y) {
      closed = true;
      break;
    }
    lifts.push_back(m.first);
    prev = m.first;
  }
  if (!closed) {
    throw Error(ErrorCode::internal,
                "y-cycle for (" + P.name(x) + ", " + P.name(y) + ") did not close");
  }

  FcCycle cycle;
  cycle.x_seq = inner.xs;
  cycle.y_seq.push_back(y);
  cycle.y_seq.insert(cycle.y_seq.end(), lifts.rbegin(), lifts.rend());
  if (cycle.y_seq.size() > 1 && cycle.y_seq[1] != inner.z) {
    throw Error(ErrorCode::internal, "closing lift differs from the internal cycle's right letter");
  }
  if (!cycle.verify(P)) {
    throw Error(ErrorCode::internal, "FC cycle for (" + P.name(x) + ", " + P.name(y) +
                                         ") fails a relation instance");
  }
  return cycle;
}

std::vector<FcCycle> all_fc_cycles(const Presentation& P) {
  std::vector<FcCycle> out;
  if (!check_cyclic(P).holds) return out;
  std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> seen;
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t y = 0; y < P.size(); ++y) {
      if (x == y) continue;
      FcCycle c = build_fc_cycle(P, static_cast<Letter>(x), static_cast<Letter>(y));
      if (seen.emplace(rotate_min_first(c.x_seq), rotate_min_first(c.y_seq)).second) {
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::optional<std::size_t> commuting_exponent(const WordEngine& engine, std::size_t limit) {
  const std::size_t n = engine.generators();
  for (std::size_t p = 1; p <= limit; ++p) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      for (std::size_t j = i + 1; j < n && all; ++j) {
        const Word a = concat(power(static_cast<Letter>(i), p), power(static_cast<Letter>(j), p));
        const Word b = concat(power(static_cast<Letter>(j), p), power(static_cast<Letter>(i), p));
        all = engine.congruent(a, b);
      }
    }
    if (all) return p;
  }
  return std::nullopt;
}

CosetDecomposition coset_decomposition(const WordEngine& engine, std::size_t p,
                                       std::size_t max_degree) {
  if (p == 0) throw Error(ErrorCode::invalid_argument, "p must be positive");
  const std::size_t n = engine.generators();
  CosetDecomposition out;
  out.p = p;
  out.coverage.name = "coset_coverage";
  out.commutation.name = "coset_commutation";

  // Exponent vectors in lexicographic order.
  std::vector<std::size_t> exps(n, 0);
  while (true) {
    Word c;
    for (std::size_t j = 0; j < n; ++j) c.insert(c.end(), exps[j], static_cast<Letter>(j));
    out.coset_reps.push_back(std::move(c));
    std::size_t j = n;
    while (j > 0 && exps[j - 1] + 1 == p) exps[--j] = 0;
    if (j == 0) break;
    ++exps[j - 1];
  }

  bool budget_hit = false;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    if (!engine.table_within_budget(d)) {
      budget_hit = true;
      break;
    }
    const ClassTable& t = engine.classes(d);
    for (ClassId c = 0; c < t.count(); ++c) {
      ++out.coverage.checked;
      bool covered = false;
      for (WordIndex w : t.members(c)) {
        if (in_coset_form(engine.word_at(w, d), p)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        out.coverage.violation("class of " +
                               engine.presentation().format_word(engine.word_at(t.rep(c), d)) +
                               " lies in no cA");
      }
    }

    // Compare {c a} and {a c} for words a of A of degree d - |c|.
    for (const Word& c : out.coset_reps) {
      if (c.size() > d || (d - c.size()) % p != 0) continue;
      const std::size_t blocks = (d - c.size()) / p;
      std::set<ClassId> left, right;
      std::vector<std::size_t> digits(blocks, 0);
      while (true) {
        Word a;
        for (std::size_t b : digits) a.insert(a.end(), p, static_cast<Letter>(b));
        left.insert(engine.class_of(concat(c, a)));
        right.insert(engine.class_of(concat(a, c)));
        std::size_t j = blocks;
        while (j > 0 && digits[j - 1] + 1 == n) digits[--j] = 0;
        if (j == 0) break;
        ++digits[j - 1];
      }
      ++out.commutation.checked;
      if (left != right) {
        out.commutation.violation("cA != Ac at degree " + std::to_string(d) + " for c = " +
                                  engine.presentation().format_word(c));
      }
    }
    out.verified_degree = d;
  }
  out.coverage.finish(budget_hit);
  out.commutation.finish(budget_hit);
  return out;
}

}  // namespace skew
