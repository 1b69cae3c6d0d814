#include "skew/corpus.hpp"

#include <algorithm>

#include "skew/error.hpp"

namespace skew {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"ex_a", "EX_A", "four generators, right and left degenerate, squares of generators central",
       "# Right and left degenerate; x_i^2 central.\n"
       "generators: x1 x2 x3 x4\n"
       "x3 x2 = x1 x4\n"
       "x4 x1 = x2 x3\n"
       "x2 x1 = x1 x2\n"
       "x3 x1 = x1 x3\n"
       "x4 x2 = x2 x4\n"
       "x4 x3 = x3 x4\n"
      },
      {"ex_b", "EX_B", "three generators, right non-degenerate but left degenerate, quadratic growth",
       "# Right non-degenerate, left degenerate; GK dimension 2.\n"
       "generators: x1 x2 x3\n"
       "x2 x1 = x3 x1\n"
       "x1 x2 = x3 x2\n"
       "x1 x3 = x2 x3\n"
      },
      {"ex_c", "EX_C", "four generators, cyclic and non-degenerate on both sides, x4 normalizing",
       "# Cyclic, non-degenerate on both sides; x4 is normalizing.\n"
       "generators: x1 x2 x3 x4\n"
       "x4 x3 = x1 x4\n"
       "x4 x2 = x2 x4\n"
       "x4 x1 = x3 x4\n"
       "x3 x2 = x1 x3\n"
       "x3 x1 = x2 x3\n"
       "x2 x1 = x1 x2\n"
      },
      {"ex_d", "EX_D", "four generators, non-degenerate on both sides, cyclic condition fails",
       "# Non-degenerate on both sides without the cyclic condition.\n"
       "generators: x1 x2 x3 x4\n"
       "x2 x1 = x1 x3\n"
       "x3 x1 = x2 x4\n"
       "x4 x1 = x1 x2\n"
       "x3 x2 = x1 x4\n"
       "x4 x2 = x2 x3\n"
       "x4 x3 = x3 x4\n"
      },
  };
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view key) {
  const auto& all = corpus();
  auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) {
    return e.key == key || e.label == key;
  });
  return it == all.end() ? nullptr : &*it;
}

Presentation builtin_presentation(std::string_view key) {
  const CorpusEntry* e = find_corpus_entry(key);
  if (e == nullptr) throw Error(ErrorCode::invalid_argument, "no built-in presentation '" + std::string(key) + "'");
  return parse_presentation(e->text);
}

}  // namespace skew
