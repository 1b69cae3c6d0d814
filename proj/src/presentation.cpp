#include "skew/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "skew/error.hpp"

namespace skew {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax: return "syntax error";
    case ErrorCode::duplicate_monomial: return "duplicate monomial";
    case ErrorCode::missing_monomial: return "missing monomial";
    case ErrorCode::not_square_free: return "not square-free";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::budget_exceeded: return "budget exceeded";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

bool GeneratorMap::is_permutation() const {
  std::vector<bool> seen(table.size(), false);
  for (Letter y : table) {
    if (y >= table.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

namespace {

bool valid_token(std::string_view tok) {
  return !tok.empty() && tok.find_first_of("=#^") == std::string_view::npos;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names,
                           const std::vector<std::pair<Monomial, Monomial>>& relations)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::syntax, "no generators declared");
  if (n > max_generators) {
    throw Error(ErrorCode::invalid_argument,
                "at most " + std::to_string(max_generators) + " generators are supported");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_token(names_[i])) {
      throw Error(ErrorCode::syntax, "invalid generator name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorCode::syntax, "generator '" + names_[i] + "' declared twice");
      }
    }
  }

  constexpr Monomial unset{0xff, 0xff};
  rel_.assign(n * n, unset);
  for (std::size_t x = 0; x < n; ++x) {
    rel_[x * n + x] = Monomial{static_cast<Letter>(x), static_cast<Letter>(x)};
  }
  for (const auto& [lhs, rhs] : relations) {
    for (const Monomial& m : {lhs, rhs}) {
      if (m.first >= n || m.second >= n) {
        throw Error(ErrorCode::invalid_argument, "relation uses an undeclared generator");
      }
      if (m.first == m.second) {
        throw Error(ErrorCode::not_square_free,
                    "not square-free: " + names_[m.first] + " " + names_[m.second]);
      }
    }
    for (const Monomial& m : {lhs, rhs}) {
      if (rel_[m.first * n + m.second] != unset || lhs == rhs) {
        throw Error(ErrorCode::duplicate_monomial,
                    "duplicate monomial: " + names_[m.first] + " " + names_[m.second]);
      }
    }
    rel_[lhs.first * n + lhs.second] = rhs;
    rel_[rhs.first * n + rhs.second] = lhs;
    relations_.emplace_back(lhs, rhs);
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (rel_[p * n + q] == unset) {
        throw Error(ErrorCode::missing_monomial,
                    "missing monomial: " + names_[p] + " " + names_[q]);
      }
    }
  }
}

std::optional<Letter> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

GeneratorMap Presentation::right_map(Letter x) const {
  GeneratorMap map{x, std::vector<Letter>(size())};
  for (std::size_t i = 0; i < size(); ++i) map.table[i] = rel(x, static_cast<Letter>(i)).first;
  return map;
}

GeneratorMap Presentation::left_map(Letter x) const {
  GeneratorMap map{x, std::vector<Letter>(size())};
  for (std::size_t i = 0; i < size(); ++i) map.table[i] = rel(static_cast<Letter>(i), x).second;
  return map;
}

DegeneracyResult Presentation::right_nondegenerate() const {
  DegeneracyResult result;
  for (std::size_t x = 0; x < size(); ++x) {
    if (!right_map(static_cast<Letter>(x)).is_permutation()) {
      result.holds = false;
      result.failing.push_back(static_cast<Letter>(x));
    }
  }
  return result;
}

DegeneracyResult Presentation::left_nondegenerate() const {
  DegeneracyResult result;
  for (std::size_t x = 0; x < size(); ++x) {
    if (!left_map(static_cast<Letter>(x)).is_permutation()) {
      result.holds = false;
      result.failing.push_back(static_cast<Letter>(x));
    }
  }
  return result;
}

std::string Presentation::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names_.at(w[i]);
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const {
  Word out;
  for (std::string_view tok : split_ws(text)) {
    std::size_t exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      std::string_view digits = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::syntax, "bad exponent in '" + std::string(tok) + "'");
      }
      tok = tok.substr(0, caret);
    }
    auto x = find(tok);
    if (!x) throw Error(ErrorCode::syntax, "unknown generator '" + std::string(tok) + "'");
    out.insert(out.end(), exponent, *x);
  }
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& name : names_) os << ' ' << name;
  os << '\n';
  for (const auto& [lhs, rhs] : relations_) {
    os << names_[lhs.first] << ' ' << names_[lhs.second] << " = " << names_[rhs.first] << ' '
       << names_[rhs.second] << '\n';
  }
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  bool have_header = false;
  std::vector<std::pair<Monomial, Monomial>> relations;
  std::unordered_map<std::string, Letter> index;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (split_ws(line).empty()) continue;

    auto fail = [&](ErrorCode code, const std::string& msg) -> Error {
      return Error(code, "line " + std::to_string(line_no) + ": " + msg);
    };

    if (!have_header) {
      constexpr std::string_view key = "generators:";
      auto first = line.find_first_not_of(" \t");
      if (line.substr(first, key.size()) != key) {
        throw fail(ErrorCode::syntax, "expected 'generators:' header");
      }
      for (auto tok : split_ws(line.substr(first + key.size()))) {
        if (!valid_token(tok)) throw fail(ErrorCode::syntax, "invalid generator name");
        if (index.count(std::string(tok))) {
          throw fail(ErrorCode::syntax, "generator '" + std::string(tok) + "' declared twice");
        }
        if (names.size() == max_generators) throw fail(ErrorCode::syntax, "too many generators");
        index.emplace(std::string(tok), static_cast<Letter>(names.size()));
        names.emplace_back(tok);
      }
      if (names.empty()) throw fail(ErrorCode::syntax, "no generators declared");
      have_header = true;
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos || line.find('=', eq + 1) != std::string_view::npos) {
      throw fail(ErrorCode::syntax, "expected '<a> <b> = <c> <d>'");
    }
    auto side = [&](std::string_view s) {
      auto toks = split_ws(s);
      if (toks.size() != 2) throw fail(ErrorCode::syntax, "each side must have two letters");
      Monomial m{};
      for (int k = 0; k < 2; ++k) {
        auto it = index.find(std::string(toks[k]));
        if (it == index.end()) {
          throw fail(ErrorCode::syntax, "unknown generator '" + std::string(toks[k]) + "'");
        }
        (k == 0 ? m.first : m.second) = it->second;
      }
      return m;
    };
    relations.emplace_back(side(line.substr(0, eq)), side(line.substr(eq + 1)));
  }
  if (!have_header) throw Error(ErrorCode::syntax, "missing 'generators:' header");
  return Presentation(std::move(names), relations);
}

}  // namespace skew
