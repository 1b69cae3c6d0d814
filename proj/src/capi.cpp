#include "skew/skew.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "skew/corpus.hpp"
#include "skew/engine.hpp"
#include "skew/error.hpp"
#include "skew/report.hpp"

struct skw_presentation {
  skew::Presentation value;
};

namespace {

thread_local std::string last_error;

skw_status status_of(skew::ErrorCode code) {
  switch (code) {
    case skew::ErrorCode::syntax:
    case skew::ErrorCode::duplicate_monomial:
    case skew::ErrorCode::missing_monomial:
    case skew::ErrorCode::not_square_free: return SKW_ERR_PARSE;
    case skew::ErrorCode::invalid_argument: return SKW_ERR_INVALID_ARGUMENT;
    case skew::ErrorCode::precondition: return SKW_ERR_PRECONDITION;
    case skew::ErrorCode::budget_exceeded: return SKW_ERR_BUDGET;
    case skew::ErrorCode::internal: return SKW_ERR_INTERNAL;
  }
  return SKW_ERR_INTERNAL;
}

template <typename F>
skw_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return SKW_OK;
  } catch (const skew::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SKW_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SKW_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

skw_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return SKW_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

int skw_api_version(void) { return SKW_API_VERSION; }

void skw_analyze_options_init(skw_analyze_options* options) {
  if (options == nullptr) return;
  options->max_degree = -1;
  options->witness_bound = -1;
  options->n_max = -1;
  options->check = nullptr;
  options->use_environment = 1;
}

skw_status skw_presentation_parse(const char* text, skw_presentation** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guard([&] { *out = new skw_presentation{skew::parse_presentation(text)}; });
}

skw_status skw_presentation_builtin(const char* key, skw_presentation** out) {
  if (key == nullptr) return null_argument("key");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guard([&] { *out = new skw_presentation{skew::builtin_presentation(key)}; });
}

skw_status skw_presentation_load(const char* source, skw_presentation** out) {
  if (source == nullptr) return null_argument("source");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  const std::string s(source);
  if (s.rfind("builtin:", 0) == 0) return skw_presentation_builtin(s.c_str() + 8, out);
  std::ifstream in(s, std::ios::binary);
  if (!in) {
    last_error = "cannot read '" + s + "'";
    return SKW_ERR_IO;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return skw_presentation_parse(text.str().c_str(), out);
}

void skw_presentation_free(skw_presentation* p) { delete p; }

size_t skw_presentation_generator_count(const skw_presentation* p) {
  return p == nullptr ? 0 : p->value.size();
}

skw_status skw_canonical(const skw_presentation* p, const char* word, char** canonical,
                         size_t* class_size) {
  if (p == nullptr) return null_argument("presentation");
  if (word == nullptr) return null_argument("word");
  if (canonical == nullptr) return null_argument("canonical");
  *canonical = nullptr;
  return guard([&] {
    const skew::WordEngine engine(p->value);
    const skew::Word w = p->value.parse_word(word);
    const std::vector<skew::Word> orbit = engine.orbit(w);
    const skew::Word canon = *std::min_element(orbit.begin(), orbit.end());
    *canonical = copy_string(p->value.format_word(canon));
    if (class_size != nullptr) *class_size = orbit.size();
  });
}

skw_status skw_analyze(const skw_presentation* p, const skw_analyze_options* options, char** json,
                       int* overall) {
  if (p == nullptr) return null_argument("presentation");
  if (json == nullptr) return null_argument("json");
  *json = nullptr;
  skw_analyze_options defaults;
  skw_analyze_options_init(&defaults);
  const skw_analyze_options& o = options != nullptr ? *options : defaults;
  return guard([&] {
    skew::AnalysisOptions opts;
    if (o.use_environment) opts.apply_environment();
    if (o.max_degree >= 0) opts.max_degree = static_cast<std::size_t>(o.max_degree);
    if (o.witness_bound >= 0) opts.witness_bound = static_cast<std::size_t>(o.witness_bound);
    if (o.n_max >= 0) opts.N_max = static_cast<std::size_t>(o.n_max);
    if (o.check != nullptr) opts.check = o.check;
    const skew::AnalysisReport report = skew::run_analysis(p->value, opts);
    *json = copy_string(skew::report_to_json(report));
    if (overall != nullptr) {
      *overall = report.overall == skew::CheckStatus::verified   ? SKW_VERIFIED
                 : report.overall == skew::CheckStatus::violated ? SKW_VIOLATED
                                                                 : SKW_BUDGET_EXHAUSTED;
    }
  });
}

skw_status skw_corpus_json(char** json) {
  if (json == nullptr) return null_argument("json");
  *json = nullptr;
  return guard([&] {
    nlohmann::json out = nlohmann::json::array();
    for (const skew::CorpusEntry& e : skew::corpus()) {
      const skew::Presentation P = skew::parse_presentation(e.text);
      std::vector<std::string> relations;
      for (const auto& [l, r] : P.relations()) {
        relations.push_back(P.name(l.first) + " " + P.name(l.second) + " = " + P.name(r.first) +
                            " " + P.name(r.second));
      }
      out.push_back({{"key", e.key},
                     {"label", e.label},
                     {"note", e.note},
                     {"generators", P.names()},
                     {"relations", relations},
                     {"text", e.text}});
    }
    *json = copy_string(out.dump(2));
  });
}

void skw_string_free(char* s) { delete[] s; }

const char* skw_last_error(void) { return last_error.c_str(); }

}  // extern "C"
