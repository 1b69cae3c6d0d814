#include "skew/congruence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "skew/error.hpp"
#include "skew/structure.hpp"

namespace skew {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  // Smaller index wins every union, so roots are block minima.
  std::vector<ClassId> labels() {
    std::vector<ClassId> out(parent_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<ClassId>(find(i));
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<ClassId> identity_labels(std::size_t count) {
  std::vector<ClassId> out(count);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::uint64_t block_count(const std::vector<ClassId>& labels) {
  std::uint64_t blocks = 0;
  for (std::size_t c = 0; c < labels.size(); ++c) blocks += labels[c] == c;
  return blocks;
}

bool same_up_to(const Partition& a, const Partition& b, std::size_t m) {
  for (std::size_t d = 0; d <= m; ++d) {
    if (a[d] != b[d]) return false;
  }
  return true;
}

// Unites classes of degree d sharing a key.
template <typename Key>
void unite_by(UnionFind& uf, std::size_t count, Key key) {
  std::unordered_map<std::uint64_t, std::size_t> first;
  for (std::size_t c = 0; c < count; ++c) {
    auto [it, fresh] = first.emplace(key(static_cast<ClassId>(c)), c);
    if (!fresh) uf.unite(it->second, c);
  }
}

// Adds x c ~ x L(c) and c x ~ L(c) x for every class c of degree d - 1.
void propagate(const WordEngine& engine, const std::vector<ClassId>& below, std::size_t d,
               UnionFind& uf) {
  if (d < 2) return;
  const std::size_t n = engine.generators();
  const ClassTable& lo = engine.classes(d - 1);
  const ClassTable& hi = engine.classes(d);
  const WordIndex shift = engine.words_of_degree(d - 1);
  for (ClassId c = 0; c < lo.count(); ++c) {
    const ClassId l = below[c];
    if (l == c) continue;
    for (WordIndex x = 0; x < n; ++x) {
      uf.unite(hi.class_of(x * shift + lo.rep(c)), hi.class_of(x * shift + lo.rep(l)));
      uf.unite(hi.class_of(lo.rep(c) * n + x), hi.class_of(lo.rep(l) * n + x));
    }
  }
}

std::vector<WordPair> generating_subset(const CongruenceAnalyzer& an,
                                        const std::vector<WordPair>& candidates, std::size_t m) {
  std::vector<WordPair> kept;
  for (const WordPair& p : candidates) {
    const Partition cl = an.closure(kept, m);
    const ClassTable& t = an.engine().classes(p.first.size());
    const ClassId a = t.class_of(an.engine().index_of(p.first));
    const ClassId b = t.class_of(an.engine().index_of(p.second));
    if (cl[p.first.size()][a] != cl[p.first.size()][b]) kept.push_back(p);
  }
  const Partition full = an.closure(kept, m);
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<WordPair> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (same_up_to(an.closure(trial, m), full, m)) kept = std::move(trial);
  }
  return kept;
}

}  // namespace

const char* to_string(RhoDecision d) noexcept {
  switch (d) {
    case RhoDecision::equivalent: return "equivalent";
    case RhoDecision::no_witness: return "no_witness";
    case RhoDecision::decided_negative: return "decided_negative";
  }
  return "unknown";
}

CongruenceAnalyzer::CongruenceAnalyzer(const WordEngine& engine, std::size_t witness_bound,
                                       std::size_t N_max, std::size_t probe_degree)
    : engine_(engine), w_max_(witness_bound) {
  const Presentation& P = engine.presentation();
  single_step_ = !P.is_right_nondegenerate() || !P.is_left_nondegenerate();
  if (!single_step_ && N_max > 0) probe_ = build_probe(N_max, probe_degree);
}

Probe CongruenceAnalyzer::build_probe(std::size_t N_max, std::size_t probe_degree) const {
  const std::size_t n = engine_.generators();
  const GeneratorSet all = GeneratorSet::all(n);
  Probe probe;
  probe.base = Word{0};
  // c w = y t puts y among the left divisors of c w while keeping those of c.
  for (std::size_t guard = 0; guard <= n; ++guard) {
    const GeneratorSet have = engine_.left_divisors(probe.base);
    if (have == all) break;
    const Letter y = static_cast<Letter>(std::countr_one(have.bits()));
    probe.base = concat(probe.base, division_witness(engine_, probe.base, Word{y}).first);
  }
  if (engine_.left_divisors(probe.base) != all) {
    throw Error(ErrorCode::internal, "probe construction did not reach S_X");
  }
  const CancellativeIdealResult cancel = cancellative_ideal_exponent(engine_, probe_degree, N_max);
  probe.N = cancel.exponent.value_or(N_max);
  probe.regime_verified = cancel.exponent.has_value() && cancel.report.ok();
  for (std::size_t i = 0; i < probe.N; ++i) probe.element = concat(probe.element, probe.base);
  return probe;
}

std::optional<Word> CongruenceAnalyzer::direct_witness(const Word& a, const Word& b, Side side,
                                                       std::size_t bound) const {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "rho pairs have equal degree");
  if (a == b) return Word{0};
  const std::size_t d = a.size();
  if (!fits(d)) return std::nullopt;
  const ClassId ca = engine_.class_of(a);
  const ClassId cb = engine_.class_of(b);
  for (std::size_t k = 1; k <= bound && fits(d + k); ++k) {
    const ClassTable& tw = engine_.classes(k);
    for (ClassId w = 0; w < tw.count(); ++w) {
      const bool hit = side == Side::right
                           ? engine_.product(d, ca, k, w) == engine_.product(d, cb, k, w)
                           : engine_.product(k, w, d, ca) == engine_.product(k, w, d, cb);
      if (hit) return engine_.word_at(tw.rep(w), k);
    }
  }
  return std::nullopt;
}

RhoResult CongruenceAnalyzer::rho_equivalent(const Word& a, const Word& b) const {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "rho pairs have equal degree");
  RhoResult out;
  if (a == b) {
    out.decision = RhoDecision::equivalent;
    out.witness = Word{0};
    return out;
  }
  if (single_step_) {
    out.warning = "degenerate presentation: only single-witness identifications are reported";
  }
  if (probe_ && fits(a.size() + probe_->element.size())) {
    const Word& c = probe_->element;
    if (engine_.class_of(concat(a, c)) == engine_.class_of(concat(b, c))) {
      out.decision = RhoDecision::equivalent;
      out.by_probe = true;
      out.witness = direct_witness(a, b, Side::right, std::max(w_max_, c.size()));
      if (!out.witness) out.witness = c;
      return out;
    }
    if (probe_->regime_verified) {
      out.decision = RhoDecision::decided_negative;
      out.by_probe = true;
      return out;
    }
  }
  out.witness = direct_witness(a, b, Side::right, w_max_);
  out.decision = out.witness ? RhoDecision::equivalent : RhoDecision::no_witness;
  return out;
}

Partition CongruenceAnalyzer::rho_partition(std::size_t m) const {
  Partition out(m + 1);
  out[0] = {0};
  for (std::size_t d = 1; d <= m; ++d) {
    if (!fits(d)) throw Error(ErrorCode::budget_exceeded, "rho degree exceeds the class budget");
    const ClassTable& t = engine_.classes(d);
    UnionFind uf(t.count());
    if (probe_ && fits(d + probe_->element.size())) {
      const std::size_t dc = probe_->element.size();
      const ClassId c = engine_.class_of(probe_->element);
      unite_by(uf, t.count(), [&](ClassId a) { return engine_.product(d, a, dc, c); });
    }
    for (std::size_t k = 1; k <= w_max_ && fits(d + k); ++k) {
      const ClassTable& tw = engine_.classes(k);
      for (ClassId w = 0; w < tw.count(); ++w) {
        unite_by(uf, t.count(), [&](ClassId a) { return engine_.product(d, a, k, w); });
      }
    }
    out[d] = uf.labels();
  }
  return out;
}

CongruenceReport CongruenceAnalyzer::rho_classes(std::size_t m) const {
  CongruenceReport report;
  report.degree_bound = m;
  report.witness_bound = w_max_;
  report.single_step = single_step_;
  if (single_step_) {
    report.warning = "degenerate presentation: only single-witness identifications are reported";
  }
  report.budget_hit = !fits(m + w_max_);
  const Partition part = rho_partition(m);
  const std::size_t search = probe_ ? std::max(w_max_, probe_->element.size()) : w_max_;

  std::vector<WordPair> candidates;
  for (std::size_t d = 0; d <= m; ++d) {
    report.class_counts.push_back(part[d].size());
    report.rho_class_counts.push_back(block_count(part[d]));
    // Consecutive members of each block, in class order.
    std::vector<ClassId> last(part[d].size(), 0);
    std::vector<char> seen(part[d].size(), 0);
    for (ClassId c = 0; c < part[d].size(); ++c) {
      const ClassId root = part[d][c];
      if (seen[root]) {
        RhoPair p{engine_.rep_word(d, last[root]), engine_.rep_word(d, c), std::nullopt};
        p.witness = direct_witness(p.a, p.b, Side::right, search);
        candidates.emplace_back(p.a, p.b);
        report.pairs.push_back(std::move(p));
      }
      seen[root] = 1;
      last[root] = c;
    }
  }
  report.generating_pairs = generating_subset(*this, candidates, m);
  return report;
}

std::vector<WordPair> CongruenceAnalyzer::rho_generating_pairs(std::size_t m) const {
  return rho_classes(m).generating_pairs;
}

Partition CongruenceAnalyzer::closure(const std::vector<WordPair>& pairs, std::size_t m) const {
  Partition out(m + 1);
  out[0] = {0};
  for (std::size_t d = 1; d <= m; ++d) {
    const ClassTable& t = engine_.classes(d);
    UnionFind uf(t.count());
    propagate(engine_, out[d - 1], d, uf);
    for (const auto& [a, b] : pairs) {
      if (a.size() == d) uf.unite(t.class_of(engine_.index_of(a)), t.class_of(engine_.index_of(b)));
    }
    out[d] = uf.labels();
  }
  return out;
}

CheckReport CongruenceAnalyzer::annihilator_check(std::size_t m, std::size_t N,
                                                  std::size_t total_degree) const {
  CheckReport report;
  report.name = "annihilator";
  report.note = "N = " + std::to_string(N);
  std::size_t top = total_degree;
  while (top > 0 && !fits(top)) --top;
  const bool budget_hit = top < total_degree;
  const Partition part = rho_partition(m);
  const auto ideal = ideal_power_classes(engine_, N, top);
  const Presentation& P = engine_.presentation();

  for (std::size_t d = 1; d <= m && d < top; ++d) {
    const ClassTable& t = engine_.classes(d);
    for (ClassId a = 0; a < t.count(); ++a) {
      for (ClassId b = a + 1; b < t.count(); ++b) {
        const bool paired = part[d][a] == part[d][b];
        bool probed = false;
        bool separated = false;
        for (std::size_t dc = 1; d + dc <= top; ++dc) {
          for (ClassId c : ideal[dc]) {
            probed = true;
            const bool right = engine_.product(d, a, dc, c) == engine_.product(d, b, dc, c);
            const bool left = engine_.product(dc, c, d, a) == engine_.product(dc, c, d, b);
            if (paired) {
              ++report.checked;
              if (!right || !left) {
                report.violation("pair (" + P.format_word(engine_.rep_word(d, a)) + ", " +
                                 P.format_word(engine_.rep_word(d, b)) + ") not annihilated by " +
                                 P.format_word(engine_.rep_word(dc, c)));
              }
            } else if (!right || !left) {
              separated = true;
            }
          }
        }
        if (!paired && probed) {
          ++report.checked;
          if (!separated) {
            report.violation("non-pair (" + P.format_word(engine_.rep_word(d, a)) + ", " +
                             P.format_word(engine_.rep_word(d, b)) + ") annihilated by every probe");
          }
        }
      }
    }
  }
  report.finish(budget_hit);
  return report;
}

RhoTower CongruenceAnalyzer::rho_tower(std::size_t m, std::size_t depth) const {
  RhoTower tower;
  tower.degree_bound = m;
  std::size_t top = m + w_max_;
  while (top > m && !fits(top)) --top;
  if (!fits(m)) throw Error(ErrorCode::budget_exceeded, "tower degree exceeds the class budget");
  tower.budget_hit = top < m + w_max_;

  Partition prev(top + 1);
  for (std::size_t d = 0; d <= top; ++d) prev[d] = identity_labels(engine_.classes(d).count());

  std::vector<Partition> levels;
  for (std::size_t k = 1; k <= depth; ++k) {
    Partition next(top + 1);
    next[0] = {0};
    for (std::size_t d = 1; d <= top; ++d) {
      const ClassTable& t = engine_.classes(d);
      UnionFind uf(t.count());
      for (ClassId c = 0; c < t.count(); ++c) uf.unite(c, prev[d][c]);
      propagate(engine_, next[d - 1], d, uf);
      for (std::size_t j = 1; d + j <= top; ++j) {
        const ClassTable& tu = engine_.classes(j);
        const auto& above = prev[d + j];
        for (ClassId u = 0; u < tu.count(); ++u) {
          unite_by(uf, t.count(), [&](ClassId s) { return above[engine_.product(d, s, j, u)]; });
          unite_by(uf, t.count(), [&](ClassId s) { return above[engine_.product(j, u, d, s)]; });
        }
      }
      next[d] = uf.labels();
    }
    TowerLevel level;
    for (std::size_t d = 0; d <= m; ++d) {
      level.class_counts.push_back(block_count(next[d]));
      level.pair_count += next[d].size() - level.class_counts.back();
    }
    tower.levels.push_back(std::move(level));
    if (!levels.empty() && !tower.stabilized_at && same_up_to(levels.back(), next, m)) {
      tower.stabilized_at = k - 1;
    }
    levels.push_back(next);
    prev = std::move(next);
  }
  tower.last.assign(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(m + 1));
  return tower;
}

}  // namespace skew
