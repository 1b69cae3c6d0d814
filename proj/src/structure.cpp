#include "skew/structure.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "skew/error.hpp"

namespace skew {

namespace {

void require_right_nondegenerate(const Presentation& P, const char* what) {
  if (!P.is_right_nondegenerate()) {
    throw Error(ErrorCode::precondition, std::string(what) + " needs a right non-degenerate presentation");
  }
}

void require_nondegenerate(const Presentation& P, const char* what) {
  if (!P.is_right_nondegenerate() || !P.is_left_nondegenerate()) {
    throw Error(ErrorCode::precondition,
                std::string(what) + " needs a left and right non-degenerate presentation");
  }
}

// Per-degree membership flags over class ids.
using ClassSets = std::vector<std::vector<char>>;

// Classes of F^factors for a per-degree factor set F (degree 0 excluded from F).
ClassSets products_of(const WordEngine& engine, const ClassSets& factor, std::size_t factors,
                      std::size_t max_degree) {
  ClassSets cur = factor;
  for (std::size_t j = 1; j < factors; ++j) {
    ClassSets next(max_degree + 1);
    for (std::size_t d = 0; d <= max_degree; ++d) next[d].assign(engine.classes(d).count(), 0);
    for (std::size_t d1 = 1; d1 < max_degree; ++d1) {
      for (std::size_t d2 = 1; d1 + d2 <= max_degree; ++d2) {
        const ClassTable& t1 = engine.classes(d1);
        const ClassTable& t2 = engine.classes(d2);
        const ClassTable& tp = engine.classes(d1 + d2);
        const WordIndex shift = engine.words_of_degree(d2);
        for (ClassId u = 0; u < t1.count(); ++u) {
          if (!cur[d1][u]) continue;
          for (ClassId v = 0; v < t2.count(); ++v) {
            if (factor[d2][v]) next[d1 + d2][tp.class_of(t1.rep(u) * shift + t2.rep(v))] = 1;
          }
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

template <typename Pred>
ClassSets select_classes(const WordEngine& engine, std::size_t max_degree, Pred pred) {
  ClassSets out(max_degree + 1);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const ClassTable& t = engine.classes(d);
    out[d].assign(t.count(), 0);
    if (d == 0) continue;
    for (ClassId c = 0; c < t.count(); ++c) out[d][c] = pred(t, c) ? 1 : 0;
  }
  return out;
}

// Largest degree <= m_max whose class table fits the budget.
std::size_t affordable_degree(const WordEngine& engine, std::size_t m_max, bool& budget_hit) {
  std::size_t d = 0;
  while (d < m_max && engine.table_within_budget(d + 1)) ++d;
  budget_hit = d < m_max;
  return d;
}

std::string format_set(const Presentation& P, GeneratorSet s) {
  std::string out = "{";
  for (Letter x : s.letters()) {
    if (out.size() > 1) out += ',';
    out += P.name(x);
  }
  return out + "}";
}

}  // namespace

DivisorProfile divisor_profile(const WordEngine& engine, const Word& w) {
  DivisorProfile out;
  if (engine.table_within_budget(w.size())) {
    const ClassTable& t = engine.classes(w.size());
    const ClassId c = t.class_of(engine.index_of(w));
    out.canonical = engine.word_at(t.rep(c), w.size());
    out.left_div = t.left_div(c);
    out.right_div = t.right_div(c);
    return out;
  }
  auto words = engine.orbit(w);
  out.canonical = *std::min_element(words.begin(), words.end());
  for (const Word& u : words) {
    if (u.empty()) continue;
    out.left_div.insert(u.front());
    out.right_div.insert(u.back());
  }
  return out;
}

bool in_DY(const WordEngine& engine, const Word& w, GeneratorSet Y) {
  return engine.left_divisors(w) == Y;
}

CheckReport verify_ideal_chain(const WordEngine& engine, std::size_t m_max) {
  const Presentation& P = engine.presentation();
  require_right_nondegenerate(P, "ideal chain check");
  CheckReport report;
  report.name = "ideal_chain";
  bool budget_hit = false;
  const std::size_t top = affordable_degree(engine, m_max, budget_hit);
  const std::size_t n = engine.generators();

  for (std::size_t d = 1; d <= top; ++d) {
    const ClassTable& t = engine.classes(d);
    for (ClassId c = 0; c < t.count(); ++c) {
      const GeneratorSet Y = t.left_div(c);
      if (Y.size() == 1) {
        const Letter y = Y.letters().front();
        ++report.checked;
        if (t.rep(c) != engine.index_of(power(y, d))) {
          report.violation("D_{" + P.name(y) + "} contains " +
                           P.format_word(engine.word_at(t.rep(c), d)));
        }
      }
      if (d == top) continue;
      const ClassTable& up = engine.classes(d + 1);
      for (std::size_t x = 0; x < n; ++x) {
        ++report.checked;
        const GeneratorSet left = up.left_div(up.class_of(x * engine.words_of_degree(d) + t.rep(c)));
        const GeneratorSet right = up.left_div(up.class_of(t.rep(c) * n + x));
        const std::string s = P.format_word(engine.word_at(t.rep(c), d));
        if (left.size() < Y.size()) {
          report.violation("level drops: " + P.name(static_cast<Letter>(x)) + " * " + s);
        } else if (!Y.contains(static_cast<Letter>(x)) && left.size() == Y.size()) {
          report.violation("level not increased: " + P.name(static_cast<Letter>(x)) + " * " + s);
        }
        if (right.size() < Y.size()) {
          report.violation("level drops: " + s + " * " + P.name(static_cast<Letter>(x)));
        }
      }
    }
  }
  report.finish(budget_hit);
  return report;
}

CheckReport verify_monomial_decomposition(const WordEngine& engine, std::size_t m_max,
                                          bool fixed_order) {
  const Presentation& P = engine.presentation();
  CheckReport report;
  report.name = fixed_order ? "ordered_monomial_decomposition" : "monomial_decomposition";
  bool budget_hit = false;
  const std::size_t top = affordable_degree(engine, m_max, budget_hit);
  const std::size_t n = engine.generators();

  auto certified = [&](const Word& w) {
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && fixed_order && w[i] < w[i - 1]) return false;
      if (i == 0 || w[i] != w[i - 1]) ++blocks;
    }
    return blocks <= n;
  };

  for (std::size_t d = 1; d <= top; ++d) {
    const ClassTable& t = engine.classes(d);
    for (ClassId c = 0; c < t.count(); ++c) {
      ++report.checked;
      bool ok = false;
      for (WordIndex w : t.members(c)) {
        if (certified(engine.word_at(w, d))) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        report.violation("no monomial representative for " +
                         P.format_word(engine.word_at(t.rep(c), d)));
      }
    }
  }
  report.finish(budget_hit);
  return report;
}

GrowthReport growth_report(const WordEngine& engine, std::size_t m_max) {
  if (m_max == 0) throw Error(ErrorCode::invalid_argument, "growth needs m_max >= 1");
  GrowthReport out;
  out.gk_bound = engine.generators();
  std::uint64_t total = 1;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::uint64_t c = engine.classes(m).count();
    out.counts.push_back(c);
    total += c;
    out.cumulative.push_back(total);
  }
  std::size_t lo = std::max<std::size_t>(1, m_max / 2);
  if (lo == m_max && m_max > 1) lo = m_max - 1;
  out.fit_from = lo;
  if (lo == m_max) return out;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(m_max - lo + 1);
  for (std::size_t m = lo; m <= m_max; ++m) {
    const double x = std::log(static_cast<double>(m));
    const double y = std::log(static_cast<double>(out.cumulative[m - 1]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.gk_estimate = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return out;
}

std::optional<OverJumpWitness> over_jump_witness(const WordEngine& engine, const Word& a,
                                                 Letter i, std::size_t k_max) {
  if (!engine.table_within_budget(a.size())) {
    throw Error(ErrorCode::budget_exceeded, "element too long for a class table");
  }
  const ClassId ac = engine.class_of(a);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (!engine.table_within_budget(a.size() + k)) break;
    const ClassId target = engine.class_of(concat(power(i, k), a));
    const ClassTable& tw = engine.classes(k);
    for (ClassId w = 0; w < tw.count(); ++w) {
      if (engine.product(a.size(), ac, k, w) == target) {
        return OverJumpWitness{a, i, k, engine.word_at(tw.rep(w), k)};
      }
    }
  }
  return std::nullopt;
}

OverJumpConstruction construct_over_jump(const WordEngine& engine, const Word& a, Letter i) {
  const Presentation& P = engine.presentation();
  require_right_nondegenerate(P, "over-jump construction");
  const std::size_t r = engine.f_order(i, a.size() + 1);
  const std::size_t m = a.size();

  OverJumpConstruction out;
  Word cur = concat(power(i, r), a);
  out.derivation.push_back(cur);
  // Step s rewrites x_i f^{s-1}(a) into f^s(a) s_j, sitting at offset r - s.
  for (std::size_t s = 1; s <= r; ++s) {
    const std::size_t off = r - s;
    for (std::size_t j = off; j < off + m; ++j) {
      const Monomial mono = P.rel(cur[j], cur[j + 1]);
      if (mono == Monomial{cur[j], cur[j + 1]}) continue;
      cur[j] = mono.first;
      cur[j + 1] = mono.second;
      out.derivation.push_back(cur);
    }
  }
  if (!std::equal(a.begin(), a.end(), cur.begin())) {
    throw Error(ErrorCode::internal, "f^r did not return to the starting word");
  }
  out.witness = OverJumpWitness{a, i, r, Word(cur.begin() + static_cast<std::ptrdiff_t>(m), cur.end())};
  return out;
}

bool is_derivation(const Presentation& P, const std::vector<Word>& chain) {
  for (std::size_t s = 1; s < chain.size(); ++s) {
    const Word& u = chain[s - 1];
    const Word& v = chain[s];
    if (u.size() != v.size()) return false;
    std::size_t first = u.size(), last = 0, diffs = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] != v[j]) {
        first = std::min(first, j);
        last = j;
        ++diffs;
      }
    }
    if (diffs == 0) continue;
    std::size_t p = first;
    if (last > first + 1) return false;
    if (last == first) {
      // One letter changed: the pair is either (p, p+1) or (p-1, p).
      if (p + 1 < u.size() && P.relates(u[p], u[p + 1], v[p], v[p + 1])) continue;
      if (p > 0 && P.relates(u[p - 1], u[p], v[p - 1], v[p])) continue;
      return false;
    }
    if (!P.relates(u[p], u[p + 1], v[p], v[p + 1])) return false;
  }
  return true;
}

namespace {

// x w = y t with |w| = |y| and |t| = 1, by inverting f_x letter by letter.
std::pair<Word, Word> divide_letter(const Presentation& P, Letter x, const Word& y) {
  Word w;
  Letter h = x;
  for (Letter target : y) {
    const auto map = P.right_map(h);
    auto it = std::find(map.table.begin(), map.table.end(), target);
    const Letter wj = static_cast<Letter>(it - map.table.begin());
    w.push_back(wj);
    h = P.rel(h, wj).second;
  }
  return {w, Word{h}};
}

}  // namespace

std::pair<Word, Word> division_witness(const WordEngine& engine, const Word& x, const Word& y) {
  const Presentation& P = engine.presentation();
  require_right_nondegenerate(P, "division witness");
  if (y.empty()) return {Word{}, x};
  if (x.empty()) return {y, Word{}};
  if (x.size() == 1) return divide_letter(P, x.front(), y);
  // x' u = y w', then z v = u s, so x v = x' z v = x' u s = y w' s.
  const Word prefix(x.begin(), x.end() - 1);
  auto [u, tail] = division_witness(engine, prefix, y);
  auto [v, s] = divide_letter(P, x.back(), u);
  return {v, concat(tail, s)};
}

CheckReport verify_claim_lemma(const WordEngine& engine, GeneratorSet Y, const Word& b,
                               ClaimLemmaOptions options) {
  const Presentation& P = engine.presentation();
  require_right_nondegenerate(P, "claim lemma check");
  if (b.empty()) throw Error(ErrorCode::invalid_argument, "b must be a nonempty word");
  if (!engine.left_divisors(b).subset_of(Y)) {
    throw Error(ErrorCode::precondition, "b is not in D_Z for a subset Z of Y");
  }
  CheckReport report;
  report.name = "claim_lemma";
  bool budget_hit = false;
  const std::size_t top = affordable_degree(engine, options.q_max, budget_hit);
  const std::size_t k = b.size();
  const std::size_t level = Y.size();
  if (top < k) {
    report.finish(true);
    return report;
  }
  const ClassId bc = engine.class_of(b);
  const ClassSets factor = select_classes(
      engine, top, [&](const ClassTable& t, ClassId c) { return t.left_div(c).size() >= level; });

  for (std::size_t factors : {k, k + 1}) {
    const bool second = factors == k + 1;
    const ClassSets prods = products_of(engine, factor, factors, top);
    for (std::size_t d = k; d <= top; ++d) {
      const ClassTable& t = engine.classes(d);
      const ClassTable& tb = engine.classes(k);
      const ClassTable& ts = engine.classes(d - k);
      const WordIndex split = engine.words_of_degree(d - k);
      for (ClassId a = 0; a < t.count(); ++a) {
        if (!prods[d][a] || t.left_div(a) != Y) continue;
        if (report.checked >= options.sample) {
          budget_hit = true;
          break;
        }
        ++report.checked;
        bool ok = false;
        for (WordIndex u : t.members(a)) {
          if (tb.class_of(u / split) != bc) continue;
          if (second && ts.left_div(ts.class_of(u % split)).size() < level) continue;
          ok = true;
          break;
        }
        if (!ok) {
          report.violation(P.format_word(engine.word_at(t.rep(a), d)) +
                           (second ? " not in b S_{i-1}" : " not in bS"));
        }
      }
    }
  }
  report.note = "Y = " + format_set(P, Y) + ", b = " + P.format_word(b);
  report.finish(budget_hit);
  return report;
}

CheckReport verify_power_inclusion(const WordEngine& engine, std::size_t m_max) {
  const Presentation& P = engine.presentation();
  require_nondegenerate(P, "power inclusion check");
  CheckReport report;
  report.name = "power_inclusion";
  bool budget_hit = false;
  const std::size_t top = affordable_degree(engine, m_max, budget_hit);
  const std::size_t n = engine.generators();

  for (std::size_t k = 2; k <= n; ++k) {
    for (bool dual : {false, true}) {
      const ClassSets factor = select_classes(engine, top, [&](const ClassTable& t, ClassId c) {
        return (dual ? t.right_div(c) : t.left_div(c)).size() >= k;
      });
      const ClassSets prods = products_of(engine, factor, k, top);
      for (std::size_t d = 1; d <= top; ++d) {
        const ClassTable& t = engine.classes(d);
        for (ClassId c = 0; c < t.count(); ++c) {
          if (!prods[d][c]) continue;
          ++report.checked;
          const std::size_t got = (dual ? t.left_div(c) : t.right_div(c)).size();
          if (got < k) {
            report.violation(std::string(dual ? "(S_k')^k not in S_k" : "S_k^k not in S_k'") +
                             " for k=" + std::to_string(k) + ": " +
                             P.format_word(engine.word_at(t.rep(c), d)));
          }
        }
      }
    }
  }
  report.finish(budget_hit);
  return report;
}

std::vector<std::vector<ClassId>> ideal_power_classes(const WordEngine& engine, std::size_t N,
                                                      std::size_t max_degree) {
  if (N == 0) throw Error(ErrorCode::invalid_argument, "N must be positive");
  const std::size_t n = engine.generators();
  const ClassSets factor = select_classes(
      engine, max_degree, [&](const ClassTable& t, ClassId c) { return t.left_div(c).size() == n; });
  const ClassSets prods = products_of(engine, factor, N, max_degree);
  std::vector<std::vector<ClassId>> out(max_degree + 1);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (ClassId c = 0; c < prods[d].size(); ++c) {
      if (prods[d][c]) out[d].push_back(c);
    }
  }
  return out;
}

CancellativeIdealResult cancellative_ideal_exponent(const WordEngine& engine, std::size_t m_max,
                                                    std::size_t N_max) {
  const Presentation& P = engine.presentation();
  require_nondegenerate(P, "cancellative ideal search");
  bool budget_hit = false;
  const std::size_t top = affordable_degree(engine, m_max, budget_hit);

  CancellativeIdealResult result;
  for (std::size_t N = 1; N <= N_max; ++N) {
    CheckReport report;
  report.name = "cancellative_ideal";
    report.note = "N = " + std::to_string(N);
    const auto ideal = ideal_power_classes(engine, N, top);
    for (std::size_t dz = 1; dz <= top; ++dz) {
      for (ClassId z : ideal[dz]) {
        for (std::size_t da = 1; da + dz <= top; ++da) {
          std::unordered_map<ClassId, ClassId> right, left;
          for (ClassId a : ideal[da]) {
            report.checked += 2;
            auto [r, fresh_r] = right.emplace(engine.product(da, a, dz, z), a);
            auto [l, fresh_l] = left.emplace(engine.product(dz, z, da, a), a);
            const std::string zs = P.format_word(engine.rep_word(dz, z));
            if (!fresh_r) {
              report.violation(P.format_word(engine.rep_word(da, r->second)) + " and " +
                               P.format_word(engine.rep_word(da, a)) + " agree after * " + zs);
            }
            if (!fresh_l) {
              report.violation(P.format_word(engine.rep_word(da, l->second)) + " and " +
                               P.format_word(engine.rep_word(da, a)) + " agree after " + zs + " *");
            }
          }
        }
      }
    }
    report.finish(budget_hit);
    result.report = report;
    if (report.violation_count == 0) {
      result.exponent = N;
      return result;
    }
  }
  return result;
}

bool is_normalizing(const WordEngine& engine, Letter x, std::size_t m_max) {
  const std::size_t n = engine.generators();
  for (std::size_t s = 0; s < n; ++s) {
    const Word xs{x, static_cast<Letter>(s)};
    const Word sx{static_cast<Letter>(s), x};
    if (!engine.right_divisors(xs).contains(x) || !engine.left_divisors(sx).contains(x)) {
      return false;
    }
  }
  for (std::size_t d = 1; d + 1 <= m_max && engine.table_within_budget(d + 1); ++d) {
    const ClassTable& t = engine.classes(d);
    const ClassTable& up = engine.classes(d + 1);
    for (ClassId c = 0; c < t.count(); ++c) {
      const ClassId left = up.class_of(x * engine.words_of_degree(d) + t.rep(c));
      const ClassId right = up.class_of(t.rep(c) * n + x);
      if (!up.right_div(left).contains(x) || !up.left_div(right).contains(x)) return false;
    }
  }
  return true;
}

}  // namespace skew
