#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skew/congruence.hpp"
#include "skew/corpus.hpp"
#include "skew/error.hpp"
#include "skew/structure.hpp"
#include "support.hpp"

using namespace skew;

namespace {

Word w(const WordEngine& e, const char* s) { return e.presentation().parse_word(s); }

// Exponent vector of a word.
std::vector<int> exponents(const Word& u, int n) {
  std::vector<int> v(n, 0);
  for (Letter x : u) ++v[x];
  return v;
}

// Closure of an exponent vector under a1 a4 <-> a2 a3.
std::set<std::vector<int>> phi_class(std::vector<int> v) {
  std::set<std::vector<int>> seen{v};
  std::vector<std::vector<int>> todo{v};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    if (x[0] > 0 && x[3] > 0) {
      auto y = x;
      --y[0], --y[3], ++y[1], ++y[2];
      if (seen.insert(y).second) todo.push_back(y);
    }
    if (x[1] > 0 && x[2] > 0) {
      auto y = x;
      --y[1], --y[2], ++y[0], ++y[3];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("rho_equivalent examples") {
  const WordEngine A(builtin_presentation("ex_a"));
  const CongruenceAnalyzer an_a(A, 4);
  const RhoResult a = an_a.rho_equivalent(w(A, "x2 x3"), w(A, "x3 x2"));
  CHECK(a.decision == RhoDecision::equivalent);
  REQUIRE(a.witness.has_value());
  CHECK(A.equivalent(concat(w(A, "x2 x3"), *a.witness), concat(w(A, "x3 x2"), *a.witness)));
  CHECK(A.equivalent(w(A, "x2 x3 x3"), w(A, "x3 x2 x3")));
  CHECK_FALSE(a.warning.empty());
  CHECK(an_a.single_step());
  CHECK_FALSE(an_a.probe().has_value());

  const WordEngine C(builtin_presentation("ex_c"));
  const CongruenceAnalyzer an_c(C, 4);
  const RhoResult c = an_c.rho_equivalent(w(C, "x1"), w(C, "x2"));
  CHECK(c.decision == RhoDecision::equivalent);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->size() <= 2);
  CHECK(C.equivalent(concat(w(C, "x1"), *c.witness), concat(w(C, "x2"), *c.witness)));
  CHECK(c.warning.empty());

  const RhoResult same = an_c.rho_equivalent(w(C, "x3 x1"), w(C, "x3 x1"));
  CHECK(same.decision == RhoDecision::equivalent);
  CHECK(same.witness == Word{0});

  REQUIRE(an_c.probe().has_value());
  CHECK(an_c.probe()->regime_verified);
  CHECK(C.left_divisors(an_c.probe()->base) == GeneratorSet::all(4));
  const RhoResult neg = an_c.rho_equivalent(w(C, "x1"), w(C, "x4"));
  CHECK(neg.decision == RhoDecision::decided_negative);
  CHECK(neg.by_probe);

  const CongruenceAnalyzer no_probe(C, 3, 0);
  CHECK(no_probe.rho_equivalent(w(C, "x1"), w(C, "x4")).decision == RhoDecision::no_witness);
  CHECK_THROWS_AS(an_c.rho_equivalent(w(C, "x1"), w(C, "x1 x2")), Error);
}

TEST_CASE("rho classes of EX_C are free commutative on two letters") {
  const WordEngine C(builtin_presentation("ex_c"));
  const CongruenceAnalyzer an(C, 4);
  const CongruenceReport r = an.rho_classes(4);
  REQUIRE(r.rho_class_counts.size() == 5);
  for (std::size_t m = 0; m <= 4; ++m) {
    CHECK(r.rho_class_counts[m] == oracle::commutative_classes(2, m, {}));
    CHECK(r.rho_class_counts[m] <= r.class_counts[m]);
  }
  for (const RhoPair& p : r.pairs) {
    CHECK(p.a.size() == p.b.size());
    REQUIRE(p.witness.has_value());
    CHECK(C.equivalent(concat(p.a, *p.witness), concat(p.b, *p.witness)));
  }
  CHECK_FALSE(r.single_step);
}

TEST_CASE("rho classes of EX_A follow the commutative quotient") {
  const WordEngine A(builtin_presentation("ex_a"));
  const CongruenceAnalyzer an(A, 4);
  const Partition part = an.rho_partition(3);
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> rel{{{1, 0, 0, 1}, {0, 1, 1, 0}}};
  for (std::size_t m = 1; m <= 3; ++m) {
    const ClassTable& t = A.classes(m);
    std::set<ClassId> blocks(part[m].begin(), part[m].end());
    CHECK(blocks.size() == oracle::commutative_classes(4, m, rel));
    for (ClassId a = 0; a < t.count(); ++a) {
      const auto image = phi_class(exponents(A.word_at(t.rep(a), m), 4));
      for (ClassId b = a + 1; b < t.count(); ++b) {
        const bool same = image.count(exponents(A.word_at(t.rep(b), m), 4)) > 0;
        CHECK((part[m][a] == part[m][b]) == same);
      }
    }
  }
  const CongruenceReport r = an.rho_classes(3);
  CHECK(r.single_step);
  CHECK_FALSE(r.warning.empty());
}

TEST_CASE("commuting presentations: rho is the identity") {
  const WordEngine K(support::make(3, support::commuting(3)));
  const CongruenceAnalyzer an(K, 3);
  const CongruenceReport r = an.rho_classes(4);
  CHECK(r.pairs.empty());
  CHECK(r.generating_pairs.empty());
  CHECK(r.rho_class_counts == r.class_counts);
  const RhoTower t = an.rho_tower(3, 3);
  for (const TowerLevel& l : t.levels) CHECK(l.pair_count == 0);
}

TEST_CASE("generating pairs") {
  const WordEngine C(builtin_presentation("ex_c"));
  const CongruenceAnalyzer an(C, 4);
  const auto gens = an.rho_generating_pairs(2);
  CHECK(gens == std::vector<WordPair>{{w(C, "x1"), w(C, "x2")}, {w(C, "x2"), w(C, "x3")}});
  // The generated congruence reproduces the rho partition.
  CHECK(an.closure(gens, 4) == an.rho_partition(4));
  CHECK(an.closure(an.rho_generating_pairs(4), 4) == an.rho_partition(4));

  const WordEngine A(builtin_presentation("ex_a"));
  const CongruenceAnalyzer an_a(A, 4);
  const auto gens_a = an_a.rho_generating_pairs(3);
  REQUIRE(gens_a.size() == 1);
  CHECK(A.class_of(gens_a[0].first) == A.class_of(w(A, "x1 x4")));
  CHECK(A.class_of(gens_a[0].first) == A.class_of(w(A, "x3 x2")));
  CHECK(A.class_of(gens_a[0].second) == A.class_of(w(A, "x2 x3")));
  CHECK(A.class_of(gens_a[0].second) == A.class_of(w(A, "x4 x1")));
  CHECK(an_a.closure(gens_a, 3) == an_a.rho_partition(3));
}

TEST_CASE("rho partition agrees with the brute-force witness oracle") {
  for (const auto& [key, rels] : std::vector<std::pair<const char*, std::vector<oracle::Rel>>>{
           {"ex_d", oracle::ex_d()}, {"ex_c", oracle::ex_c()}, {"ex_a", oracle::ex_a()}}) {
    const WordEngine E(builtin_presentation(key));
    const CongruenceAnalyzer an(E, 2, 0);
    const Partition part = an.rho_partition(3);
    const oracle::Rules R(4, rels);
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto blocks = oracle::rho_blocks(R, m, 2);
      REQUIRE(blocks.size() == part[m].size());
      for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
          CHECK((blocks[a] == blocks[b]) == (part[m][a] == part[m][b]));
        }
      }
    }
  }
}

TEST_CASE("one-step sufficiency and left-right agreement") {
  for (const char* key : {"ex_c", "ex_d"}) {
    const WordEngine E(builtin_presentation(key));
    const CongruenceAnalyzer an(E, 4, 0);
    for (std::size_t m = 1; m <= 3; ++m) {
      const ClassTable& t = E.classes(m);
      const std::size_t k = t.count();
      std::vector<char> rel(k * k, 0);
      for (ClassId a = 0; a < k; ++a) {
        for (ClassId b = 0; b < k; ++b) {
          const Word wa = E.word_at(t.rep(a), m), wb = E.word_at(t.rep(b), m);
          const bool right = an.direct_witness(wa, wb, Side::right, 4).has_value();
          const bool left = an.direct_witness(wa, wb, Side::left, 4).has_value();
          CHECK(right == left);
          rel[a * k + b] = right;
        }
      }
      for (ClassId a = 0; a < k; ++a) {
        for (ClassId b = 0; b < k; ++b) {
          for (ClassId c = 0; c < k; ++c) {
            if (rel[a * k + b] && rel[b * k + c]) CHECK(rel[a * k + c]);
          }
        }
      }
    }
  }
}

TEST_CASE("annihilator characterisation") {
  const WordEngine C(builtin_presentation("ex_c"));
  const CongruenceAnalyzer an(C, 4);
  const CheckReport r = an.annihilator_check(3, 1);
  CHECK(r.status == CheckStatus::verified);
  CHECK(r.checked > 0);

  // (x1, x4) is separated by some element of S_X.
  const auto ideal = ideal_power_classes(C, 1, 6);
  bool separated = false;
  for (std::size_t d = 1; d <= 5; ++d) {
    for (ClassId c : ideal[d]) {
      const Word probe = C.rep_word(d, c);
      separated = separated || !C.equivalent(concat(w(C, "x1"), probe), concat(w(C, "x4"), probe));
    }
  }
  CHECK(separated);

  // Commutators of EX_A are killed by products of generators on both sides.
  const WordEngine A(builtin_presentation("ex_a"));
  for (std::size_t d = 1; d <= 3; ++d) {
    for (WordIndex i = 0; i < A.words_of_degree(d); ++i) {
      const Word y = A.word_at(i, d);
      CHECK(A.equivalent(concat(y, w(A, "x2 x3")), concat(y, w(A, "x3 x2"))));
      CHECK(A.equivalent(concat(w(A, "x2 x3"), y), concat(w(A, "x3 x2"), y)));
    }
  }
}

TEST_CASE("rho tower") {
  const WordEngine A(builtin_presentation("ex_a"));
  const CongruenceAnalyzer an_a(A, 4);
  const RhoTower ta = an_a.rho_tower(3, 3);
  CHECK(ta.stabilized_at == std::size_t{1});
  CHECK(ta.last == an_a.rho_partition(3));
  CHECK(ta.levels.size() == 3);

  const WordEngine C(builtin_presentation("ex_c"));
  const CongruenceAnalyzer an_c(C, 4);
  const RhoTower tc = an_c.rho_tower(3, 3);
  REQUIRE(tc.stabilized_at.has_value());
  CHECK(tc.last == an_c.rho_partition(3));
  for (std::size_t k = 1; k < tc.levels.size(); ++k) {
    CHECK(tc.levels[k].pair_count >= tc.levels[k - 1].pair_count);
  }
}
