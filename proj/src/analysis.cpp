#include <algorithm>
#include <cstdlib>
#include <functional>

#include "skew/conditions.hpp"
#include "skew/congruence.hpp"
#include "skew/error.hpp"
#include "skew/report.hpp"
#include "skew/structure.hpp"

namespace skew {

namespace {

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0') {
    throw Error(ErrorCode::invalid_argument, std::string(name) + " is not a non-negative integer");
  }
  return static_cast<std::size_t>(x);
}

std::vector<std::string> letter_names(const Presentation& P, const std::vector<Letter>& xs) {
  std::vector<std::string> out;
  for (Letter x : xs) out.push_back(P.name(x));
  return out;
}

std::string relation_text(const Presentation& P, const std::pair<Monomial, Monomial>& r) {
  return P.name(r.first.first) + " " + P.name(r.first.second) + " = " + P.name(r.second.first) +
         " " + P.name(r.second.second);
}

// All words of degree 0..max_len in index order.
std::vector<Word> words_up_to(std::size_t n, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t x = 0; x < n; ++x) next.push_back(concat(w, Word{static_cast<Letter>(x)}));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

CheckReport f_injectivity(const WordEngine& engine, std::size_t m_max) {
  CheckReport report;
  report.name = "f_injective";
  for (std::size_t m = 2; m <= m_max; ++m) {
    for (std::size_t y = 0; y < engine.generators(); ++y) {
      ++report.checked;
      try {
        engine.f_order(static_cast<Letter>(y), m);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::precondition) throw;
        report.violation(e.what());
      }
    }
  }
  report.finish();
  return report;
}

CheckReport over_jump_check(const WordEngine& engine, std::size_t max_len) {
  const Presentation& P = engine.presentation();
  CheckReport report;
  report.name = "over_jump";
  for (const Word& a : words_up_to(engine.generators(), max_len)) {
    for (std::size_t i = 0; i < engine.generators(); ++i) {
      const Letter x = static_cast<Letter>(i);
      ++report.checked;
      const OverJumpConstruction c = construct_over_jump(engine, a, x);
      const Word start = concat(power(x, c.witness.k), a);
      const Word end = concat(a, c.witness.w);
      if (c.derivation.front() != start || c.derivation.back() != end ||
          !is_derivation(P, c.derivation) || c.witness.w.size() != c.witness.k) {
        report.violation("over-jump construction failed for a = " + P.format_word(a) + ", " +
                         P.name(x));
      }
    }
  }
  report.finish();
  return report;
}

CheckReport rho_consistency(const CongruenceAnalyzer& an, const CongruenceReport& rho,
                            const RhoTower* tower) {
  const WordEngine& engine = an.engine();
  const Presentation& P = engine.presentation();
  CheckReport report;
  report.name = "rho_consistency";
  for (const RhoPair& p : rho.pairs) {
    ++report.checked;
    if (p.a.size() != p.b.size()) report.violation("inhomogeneous pair");
    if (p.witness && !engine.congruent(concat(p.a, *p.witness), concat(p.b, *p.witness))) {
      report.violation("witness " + P.format_word(*p.witness) + " fails for (" +
                       P.format_word(p.a) + ", " + P.format_word(p.b) + ")");
    }
  }
  for (std::size_t d = 0; d < rho.rho_class_counts.size(); ++d) {
    ++report.checked;
    if (rho.rho_class_counts[d] > rho.class_counts[d]) report.violation("more rho-classes than classes");
  }
  // Truncated runs are not comparable.
  if (tower != nullptr && tower->stabilized_at && !tower->budget_hit && !rho.budget_hit) {
    const Partition part = an.rho_partition(tower->degree_bound);
    ++report.checked;
    if (part != tower->last) report.violation("stabilized tower differs from the rho partition");
  }
  report.finish(rho.budget_hit || (tower != nullptr && tower->budget_hit));
  return report;
}

}  // namespace

void AnalysisOptions::apply_environment() {
  if (auto v = env_size("SKW_MAX_DEGREE")) max_degree = *v;
  if (auto v = env_size("SKW_WITNESS_BOUND")) witness_bound = *v;
}

std::size_t AnalysisOptions::effective_rho_degree() const {
  if (rho_degree) return *rho_degree;
  return max_degree > witness_bound + 1 ? max_degree - witness_bound : 1;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "fc_cycles",    "f_injective", "ideal_chain",        "monomial_decomposition",
      "power_inclusion", "over_jump", "coset",             "cancellative_ideal",
      "annihilator",  "growth",      "rho"};
  return names;
}

const CheckReport* AnalysisReport::find_check(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const CheckReport& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

AnalysisReport run_analysis(const Presentation& P, const AnalysisOptions& options) {
  if (!options.check.empty() &&
      std::find(check_names().begin(), check_names().end(), options.check) == check_names().end()) {
    throw Error(ErrorCode::invalid_argument, "unknown check '" + options.check + "'");
  }
  if (options.max_degree == 0) throw Error(ErrorCode::invalid_argument, "max degree must be positive");
  auto want = [&](const char* name) { return options.check.empty() || options.check == name; };

  const WordEngine engine(P, options.budget);
  AnalysisReport report;
  const std::size_t m = options.max_degree;
  const std::size_t rho_m = options.effective_rho_degree();
  report.budgets = {m, options.witness_bound, options.N_max, rho_m, options.budget.max_table_words};

  report.presentation.generators = P.names();
  for (const auto& r : P.relations()) report.presentation.relations.push_back(relation_text(P, r));

  const DegeneracyResult right = P.right_nondegenerate();
  const DegeneracyResult left = P.left_nondegenerate();
  const CyclicResult cyclic = check_cyclic(P);
  Flags& flags = report.flags;
  flags.right_nondegenerate = right.holds;
  flags.left_nondegenerate = left.holds;
  flags.right_failing = letter_names(P, right.failing);
  flags.left_failing = letter_names(P, left.failing);
  flags.cyclic = cyclic.holds;
  if (cyclic.counterexample) {
    flags.cyclic_counterexample = {P.name(cyclic.counterexample->first),
                                   P.name(cyclic.counterexample->second)};
  }
  const bool both = right.holds && left.holds;

  // Runs one step; a budget overrun becomes a note and a budget_exhausted entry.
  auto guarded = [&](const char* name, const std::function<void()>& step) {
    try {
      step();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget_exceeded) throw;
      report.notes.push_back(std::string(name) + ": " + e.what());
      CheckReport c;
      c.name = name;
      c.note = e.what();
      c.finish(true);
      report.checks.push_back(std::move(c));
    }
  };
  auto skip = [&](const char* name, const std::string& why) {
    report.notes.push_back(std::string(name) + " skipped: " + why);
  };

  guarded("normalizing", [&] {
    for (std::size_t x = 0; x < P.size(); ++x) {
      if (is_normalizing(engine, static_cast<Letter>(x), m)) flags.normalizing.push_back(P.name(static_cast<Letter>(x)));
    }
  });

  if (want("fc_cycles")) {
    if (cyclic.holds) {
      CheckReport c;
      c.name = "fc_cycles";
      for (const FcCycle& cycle : all_fc_cycles(P)) {
        ++c.checked;
        FcCycleRecord rec{letter_names(P, cycle.x_seq), letter_names(P, cycle.y_seq), cycle.verify(P)};
        if (!rec.verified) c.violation("cycle through " + rec.x.front() + " fails");
        report.fc_cycles.push_back(std::move(rec));
      }
      c.finish();
      report.checks.push_back(std::move(c));
    } else {
      skip("fc_cycles", "cyclic condition fails");
    }
  }

  if (want("f_injective")) {
    if (right.holds) {
      guarded("f_injective", [&] { report.checks.push_back(f_injectivity(engine, std::min<std::size_t>(m, 6))); });
    } else {
      skip("f_injective", "right degenerate");
    }
  }
  if (want("ideal_chain")) {
    if (right.holds) {
      guarded("ideal_chain", [&] { report.checks.push_back(verify_ideal_chain(engine, m)); });
    } else {
      skip("ideal_chain", "right degenerate");
    }
  }
  if (want("monomial_decomposition")) {
    if (right.holds) {
      guarded("monomial_decomposition",
              [&] { report.checks.push_back(verify_monomial_decomposition(engine, m)); });
    } else {
      skip("monomial_decomposition", "right degenerate");
    }
  }
  if (want("power_inclusion")) {
    if (both) {
      guarded("power_inclusion", [&] { report.checks.push_back(verify_power_inclusion(engine, m)); });
    } else {
      skip("power_inclusion", "degenerate");
    }
  }
  if (want("over_jump")) {
    if (right.holds) {
      guarded("over_jump", [&] {
        report.checks.push_back(over_jump_check(engine, std::min<std::size_t>(3, m)));
      });
    } else {
      skip("over_jump", "right degenerate");
    }
  }
  if (want("coset")) {
    guarded("coset", [&] {
      report.commuting_exponent = commuting_exponent(engine);
      if (report.commuting_exponent && cyclic.holds) {
        CosetDecomposition dec = coset_decomposition(engine, *report.commuting_exponent, m);
        CosetRecord rec{dec.p, dec.verified_degree, {}};
        for (const Word& c : dec.coset_reps) rec.coset_reps.push_back(P.format_word(c));
        report.coset_decomposition = std::move(rec);
        report.checks.push_back(std::move(dec.coverage));
        report.checks.push_back(std::move(dec.commutation));
      } else {
        skip("coset", report.commuting_exponent ? "cyclic condition fails" : "no commuting exponent");
      }
    });
  }
  if (want("growth")) {
    guarded("growth", [&] {
      const GrowthReport g = growth_report(engine, m);
      report.growth = GrowthRecord{g.counts, g.cumulative, g.gk_estimate, g.gk_bound, g.fit_from};
    });
  }
  std::optional<std::size_t> exponent;
  if (want("cancellative_ideal") || want("annihilator")) {
    if (both) {
      guarded("cancellative_ideal", [&] {
        CancellativeIdealResult r = cancellative_ideal_exponent(engine, m, options.N_max);
        exponent = r.exponent;
        if (want("cancellative_ideal")) report.checks.push_back(std::move(r.report));
      });
    } else {
      skip("cancellative_ideal", "degenerate");
    }
  }
  if (want("rho") || want("annihilator")) {
    guarded("rho", [&] {
      const CongruenceAnalyzer an(engine, options.witness_bound, options.N_max, m);
      if (want("rho")) {
        const CongruenceReport cr = an.rho_classes(rho_m);
        RhoRecord rec;
        rec.degree_bound = cr.degree_bound;
        rec.witness_bound = cr.witness_bound;
        rec.single_step = cr.single_step;
        rec.budget_hit = cr.budget_hit;
        rec.warning = cr.warning;
        if (an.probe()) {
          const Probe& pr = *an.probe();
          rec.probe = ProbeRecord{P.format_word(pr.base), pr.N, P.format_word(pr.element),
                                  pr.regime_verified};
        }
        for (const RhoPair& p : cr.pairs) {
          RhoPairRecord pr{P.format_word(p.a), P.format_word(p.b), std::nullopt};
          if (p.witness) pr.witness = P.format_word(*p.witness);
          rec.pairs.push_back(std::move(pr));
        }
        for (const auto& [a, b] : cr.generating_pairs) {
          rec.generators.emplace_back(P.format_word(a), P.format_word(b));
        }
        rec.counts = cr.rho_class_counts;
        rec.class_counts = cr.class_counts;
        const RhoTower tower = an.rho_tower(rho_m, 3);
        TowerRecord tr;
        for (const TowerLevel& l : tower.levels) {
          tr.class_counts.push_back(l.class_counts);
          tr.pair_counts.push_back(l.pair_count);
        }
        tr.stabilized_at = tower.stabilized_at;
        tr.budget_hit = tower.budget_hit;
        rec.tower = std::move(tr);
        report.rho = std::move(rec);
        report.checks.push_back(rho_consistency(an, cr, cr.single_step ? nullptr : &tower));
      }
      if (want("annihilator")) {
        if (both && exponent) {
          report.checks.push_back(an.annihilator_check(std::min<std::size_t>(rho_m, 3), *exponent, m));
        } else {
          skip("annihilator", "no certified cancellative exponent");
        }
      }
    });
  }

  report.overall = CheckStatus::verified;
  bool exhausted = report.checks.empty();
  for (const CheckReport& c : report.checks) {
    if (c.status == CheckStatus::violated) report.overall = CheckStatus::violated;
    if (c.status == CheckStatus::budget_exhausted) exhausted = true;
  }
  if (report.overall != CheckStatus::violated && exhausted) report.overall = CheckStatus::budget_exhausted;
  return report;
}

}  // namespace skew
