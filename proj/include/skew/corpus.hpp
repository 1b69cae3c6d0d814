#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew/presentation.hpp"

namespace skew {

struct CorpusEntry {
  std::string key;    // ex_a, ex_b, ...
  std::string label;  // EX_A, EX_B, ...
  std::string note;
  std::string text;   // presentation in .skw format
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(std::string_view key);
Presentation builtin_presentation(std::string_view key);

}  // namespace skew
