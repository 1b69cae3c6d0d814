#include "skew/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "skew/error.hpp"

namespace skew {

WordEngine::WordEngine(Presentation presentation, Budget budget)
    : presentation_(std::move(presentation)), budget_(budget) {}

Word WordEngine::apply_relation_at(const Word& w, std::size_t pos) const {
  if (w.size() < 2 || pos + 1 >= w.size()) {
    throw Error(ErrorCode::invalid_argument,
                "position " + std::to_string(pos + 1) + " out of range for a word of degree " +
                    std::to_string(w.size()));
  }
  Word out = w;
  const Monomial m = presentation_.rel(w[pos], w[pos + 1]);
  out[pos] = m.first;
  out[pos + 1] = m.second;
  return out;
}

Word WordEngine::apply_g(const Word& w) const {
  if (w.size() < 2) throw Error(ErrorCode::invalid_argument, "g needs a word of degree >= 2");
  Word out = w;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const Monomial m = presentation_.rel(out[i], out[i + 1]);
    out[i] = m.first;
    out[i + 1] = m.second;
  }
  return out;
}

Word WordEngine::apply_f(Letter y, const Word& w) const {
  if (w.empty()) return {};
  Word full = apply_g(concat(Word{y}, w));
  full.pop_back();
  return full;
}

std::uint64_t WordEngine::words_of_degree(std::size_t degree) const {
  std::uint64_t total = 1;
  const std::uint64_t n = generators();
  for (std::size_t i = 0; i < degree; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= n;
  }
  return total;
}

WordIndex WordEngine::index_of(const Word& w) const {
  if (words_of_degree(w.size()) == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::budget_exceeded, "word too long to index");
  }
  WordIndex idx = 0;
  for (Letter x : w) idx = idx * generators() + x;
  return idx;
}

Word WordEngine::word_at(WordIndex index, std::size_t degree) const {
  Word w(degree);
  for (std::size_t i = degree; i-- > 0;) {
    w[i] = static_cast<Letter>(index % generators());
    index /= generators();
  }
  return w;
}

std::uint64_t WordEngine::f_order(Letter y, std::size_t m) const {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "f_order needs m >= 1");
  if (m == 1) return 1;
  const std::size_t d = m - 1;
  const std::uint64_t count = words_of_degree(d);
  if (count > budget_.max_table_words) {
    throw Error(ErrorCode::budget_exceeded, "f_order domain X^" + std::to_string(d) + " too large");
  }
  std::vector<WordIndex> image(count);
  std::vector<bool> hit(count, false);
  for (WordIndex u = 0; u < count; ++u) {
    image[u] = index_of(apply_f(y, word_at(u, d)));
    if (hit[image[u]]) {
      throw Error(ErrorCode::precondition,
                  "f_" + presentation_.name(y) + " is not injective on words of degree " +
                      std::to_string(d));
    }
    hit[image[u]] = true;
  }
  std::uint64_t order = 1;
  std::vector<bool> seen(count, false);
  for (WordIndex u = 0; u < count; ++u) {
    if (seen[u]) continue;
    std::uint64_t len = 0;
    for (WordIndex v = u; !seen[v]; v = image[v]) {
      seen[v] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(order, len);
    if (order / g > std::numeric_limits<std::uint64_t>::max() / len) {
      throw Error(ErrorCode::budget_exceeded, "permutation order overflows 64 bits");
    }
    order = order / g * len;
  }
  return order;
}

std::vector<Word> WordEngine::orbit(const Word& w) const {
  std::vector<Word> out{w};
  std::unordered_set<std::string> seen{std::string(w.begin(), w.end())};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Word cur = out[head];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) continue;
      Word next = apply_relation_at(cur, i);
      if (seen.emplace(next.begin(), next.end()).second) {
        if (out.size() >= budget_.max_orbit_words) {
          throw Error(ErrorCode::budget_exceeded, "orbit exceeds budget");
        }
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

Word WordEngine::canonical_form(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(w.size()); it != tables_.end()) {
      const ClassTable& t = *it->second;
      return word_at(t.rep(t.class_of(index_of(w))), w.size());
    }
  }
  auto words = orbit(w);
  return *std::min_element(words.begin(), words.end());
}

bool WordEngine::equivalent(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(a.size()); it != tables_.end()) {
      return it->second->class_of(index_of(a)) == it->second->class_of(index_of(b));
    }
  }
  std::vector<Word> queue{a};
  std::unordered_set<std::string> seen{std::string(a.begin(), a.end())};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Word cur = queue[head];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) continue;
      Word next = apply_relation_at(cur, i);
      if (next == b) return true;
      if (seen.emplace(next.begin(), next.end()).second) {
        if (queue.size() >= budget_.max_orbit_words) {
          throw Error(ErrorCode::budget_exceeded, "orbit exceeds budget");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

bool WordEngine::congruent(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return false;
  if (table_within_budget(a.size())) return class_of(a) == class_of(b);
  return equivalent(a, b);
}

bool WordEngine::table_within_budget(std::size_t degree) const {
  return words_of_degree(degree) <= budget_.max_table_words;
}

const ClassTable& WordEngine::classes(std::size_t degree) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(degree); it != tables_.end()) return *it->second;
  }
  if (!table_within_budget(degree)) {
    throw Error(ErrorCode::budget_exceeded,
                "class table of degree " + std::to_string(degree) + " exceeds the word budget");
  }
  auto table = build_table(degree);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = tables_.emplace(degree, std::move(table));
  return *it->second;
}

std::unique_ptr<ClassTable> WordEngine::build_table(std::size_t degree) const {
  auto table = std::make_unique<ClassTable>();
  table->degree_ = degree;
  const std::uint64_t count = words_of_degree(degree);
  const std::size_t n = generators();
  constexpr ClassId unset = std::numeric_limits<ClassId>::max();
  table->class_of_.assign(count, unset);
  table->members_.reserve(count);
  table->offsets_.push_back(0);

  // place[i] = n^(degree-1-i)
  std::vector<WordIndex> place(degree);
  for (std::size_t i = degree; i-- > 0;) place[i] = (i + 1 == degree) ? 1 : place[i + 1] * n;

  Word letters(degree);
  for (WordIndex seed = 0; seed < count; ++seed) {
    if (table->class_of_[seed] != unset) continue;
    // Words below `seed` are already classified, so the seed is the class minimum.
    const ClassId c = static_cast<ClassId>(table->reps_.size());
    table->reps_.push_back(seed);
    GeneratorSet left, right;
    std::size_t head = table->members_.size();
    table->members_.push_back(seed);
    table->class_of_[seed] = c;
    while (head < table->members_.size()) {
      const WordIndex w = table->members_[head++];
      WordIndex rest = w;
      for (std::size_t i = degree; i-- > 0;) {
        letters[i] = static_cast<Letter>(rest % n);
        rest /= n;
      }
      if (degree > 0) {
        left.insert(letters.front());
        right.insert(letters.back());
      }
      for (std::size_t i = 0; i + 1 < degree; ++i) {
        const Letter a = letters[i], b = letters[i + 1];
        if (a == b) continue;
        const Monomial m = presentation_.rel(a, b);
        const WordIndex next = w - a * place[i] - b * place[i + 1] + m.first * place[i] +
                               m.second * place[i + 1];
        if (table->class_of_[next] == unset) {
          table->class_of_[next] = c;
          table->members_.push_back(next);
        }
      }
    }
    table->offsets_.push_back(table->members_.size());
    table->left_div_.push_back(left);
    table->right_div_.push_back(right);
  }
  return table;
}

ClassId WordEngine::product(std::size_t d1, ClassId a, std::size_t d2, ClassId b) const {
  const ClassTable& ta = classes(d1);
  const ClassTable& tb = classes(d2);
  const ClassTable& tp = classes(d1 + d2);
  return tp.class_of(ta.rep(a) * words_of_degree(d2) + tb.rep(b));
}

GeneratorSet WordEngine::left_divisors(const Word& w) const {
  if (table_within_budget(w.size())) {
    const ClassTable& t = classes(w.size());
    return t.left_div(t.class_of(index_of(w)));
  }
  GeneratorSet out;
  for (const Word& u : orbit(w)) {
    if (!u.empty()) out.insert(u.front());
  }
  return out;
}

GeneratorSet WordEngine::right_divisors(const Word& w) const {
  if (table_within_budget(w.size())) {
    const ClassTable& t = classes(w.size());
    return t.right_div(t.class_of(index_of(w)));
  }
  GeneratorSet out;
  for (const Word& u : orbit(w)) {
    if (!u.empty()) out.insert(u.back());
  }
  return out;
}

}  // namespace skew
