#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "skew/skew.h"

namespace {

using nlohmann::json;

int exit_for(skw_status s) {
  switch (s) {
    case SKW_OK: return 0;
    case SKW_ERR_PARSE: return 3;
    default: return 1;
  }
}

int fail(skw_status s) {
  std::cerr << "skw: " << skw_last_error() << "\n";
  return exit_for(s);
}

std::string join(const json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string yes_no(const json& v) { return v.get<bool>() ? "yes" : "no"; }

void print_text(const json& r) {
  const json& f = r["flags"];
  std::cout << "generators: " << join(r["presentation"]["generators"], " ") << "\n";
  for (const auto& rel : r["presentation"]["relations"]) std::cout << "  " << rel.get<std::string>() << "\n";
  std::cout << "right non-degenerate: " << yes_no(f["right_nondegenerate"]) << "\n";
  std::cout << "left non-degenerate:  " << yes_no(f["left_nondegenerate"]) << "\n";
  std::cout << "cyclic:               " << yes_no(f["cyclic"]);
  if (!f["cyclic_counterexample"].is_null()) {
    std::cout << " (fails at " << join(f["cyclic_counterexample"], ", ") << ")";
  }
  std::cout << "\n";
  if (!f["normalizing"].empty()) std::cout << "normalizing: " << join(f["normalizing"], " ") << "\n";

  if (!r["fc_cycles"].empty()) {
    std::cout << "\nFC cycles:\n";
    for (const auto& c : r["fc_cycles"]) {
      std::cout << "  x = (" << join(c["x"], " ") << ")  y = (" << join(c["y"], " ") << ")"
                << (c["verified"].get<bool>() ? "" : "  FAILS") << "\n";
    }
  }
  if (!r["commuting_exponent"].is_null()) {
    std::cout << "\ncommuting exponent p = " << r["commuting_exponent"] << "\n";
  }
  if (!r["coset_decomposition"].is_null()) {
    const json& c = r["coset_decomposition"];
    std::cout << "coset representatives: " << c["coset_reps"].size() << " (checked to degree "
              << c["verified_degree"] << ")\n";
  }
  if (!r["growth"].is_null()) {
    const json& g = r["growth"];
    std::cout << "\nclasses by degree: " << join(g["counts"], " ") << "\n";
    std::printf("GK estimate: %.3f (bound %d, fit from degree %d)\n", g["gk_estimate"].get<double>(),
                g["gk_bound"].get<int>(), g["fit_from"].get<int>());
    std::fflush(stdout);
  }
  if (!r["rho"].is_null()) {
    const json& rho = r["rho"];
    std::cout << "\nrho (degree <= " << rho["degree_bound"] << ", witnesses <= "
              << rho["witness_bound"] << ")\n";
    if (!rho["warning"].get<std::string>().empty()) std::cout << "  warning: " << rho["warning"].get<std::string>() << "\n";
    if (!rho["probe"].is_null()) {
      const json& p = rho["probe"];
      std::cout << "  probe: (" << p["base"].get<std::string>() << ")^" << p["N"]
                << (p["regime_verified"].get<bool>() ? "" : "  [regime not certified]") << "\n";
    }
    std::cout << "  rho-classes by degree: " << join(rho["rho_counts"], " ") << "\n";
    std::cout << "  classes by degree:     " << join(rho["class_counts"], " ") << "\n";
    std::cout << "  generating pairs:";
    if (rho["rho_generators"].empty()) std::cout << " none";
    for (const auto& g : rho["rho_generators"]) {
      std::cout << " (" << g[0].get<std::string>() << ", " << g[1].get<std::string>() << ")";
    }
    std::cout << "\n";
    if (!rho["tower"].is_null() && !rho["tower"]["stabilized_at"].is_null()) {
      std::cout << "  tower stabilizes at rho_" << rho["tower"]["stabilized_at"] << "\n";
    }
  }
  std::cout << "\nchecks:\n";
  for (const auto& c : r["checks"]) {
    std::printf("  %-32s %-17s %llu instances\n", c["name"].get<std::string>().c_str(),
                c["status"].get<std::string>().c_str(), c["checked"].get<unsigned long long>());
    std::fflush(stdout);
    for (const auto& v : c["violations"]) std::cout << "    " << v.get<std::string>() << "\n";
  }
  for (const auto& n : r["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
  std::cout << "\noverall: " << r["overall"].get<std::string>() << "\n";
}

struct Loaded {
  skw_presentation* p = nullptr;
  ~Loaded() { skw_presentation_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of semigroups of skew type"};
  app.require_subcommand(1);

  std::string source;
  std::optional<int> max_degree;
  std::optional<int> witness_bound;
  std::string check;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Run the verification pipeline on a presentation");
  analyze->add_option("source", source, "Presentation file (.skw) or builtin:<name>")->required();
  analyze->add_option("--max-degree", max_degree, "Largest word degree examined (default 8)")
      ->check(CLI::Range(1, 64));
  analyze->add_option("--witness-bound", witness_bound, "Largest rho witness degree (default 4)")
      ->check(CLI::Range(0, 64));
  analyze->add_option("--check", check, "Run a single verifier");
  analyze->add_flag("--json", as_json, "Print the JSON report");

  std::string word;
  auto* canon = app.add_subcommand("canon", "Canonical form and class size of a word");
  canon->add_option("source", source, "Presentation file (.skw) or builtin:<name>")->required();
  canon->add_option("word", word, "Word, e.g. \"x1 x2^3 x4\"")->required();

  auto* corpus = app.add_subcommand("corpus", "List the built-in presentations");
  corpus->add_flag("--json", as_json, "Print the corpus as JSON");

  CLI11_PARSE(app, argc, argv);

  if (corpus->parsed()) {
    char* out = nullptr;
    if (skw_status s = skw_corpus_json(&out); s != SKW_OK) return fail(s);
    const json entries = json::parse(out);
    if (as_json) {
      std::cout << out << "\n";
    } else {
      for (const auto& e : entries) {
        std::cout << e["label"].get<std::string>() << " (builtin:" << e["key"].get<std::string>()
                  << "): " << e["note"].get<std::string>() << "\n";
        std::cout << "  generators: " << join(e["generators"], " ") << "\n";
        for (const auto& rel : e["relations"]) std::cout << "  " << rel.get<std::string>() << "\n";
      }
    }
    skw_string_free(out);
    return 0;
  }

  Loaded loaded;
  if (skw_status s = skw_presentation_load(source.c_str(), &loaded.p); s != SKW_OK) return fail(s);

  if (canon->parsed()) {
    char* out = nullptr;
    std::size_t size = 0;
    if (skw_status s = skw_canonical(loaded.p, word.c_str(), &out, &size); s != SKW_OK) {
      return s == SKW_ERR_PARSE ? fail(SKW_ERR_INVALID_ARGUMENT) : fail(s);
    }
    std::cout << out << "\nclass size " << size << "\n";
    skw_string_free(out);
    return 0;
  }

  skw_analyze_options opts;
  skw_analyze_options_init(&opts);
  if (max_degree) opts.max_degree = *max_degree;
  if (witness_bound) opts.witness_bound = *witness_bound;
  if (!check.empty()) opts.check = check.c_str();
  char* out = nullptr;
  int overall = SKW_VERIFIED;
  if (skw_status s = skw_analyze(loaded.p, &opts, &out, &overall); s != SKW_OK) return fail(s);
  if (as_json) {
    std::cout << out << "\n";
  } else {
    print_text(json::parse(out));
  }
  skw_string_free(out);
  return overall == SKW_VIOLATED ? 2 : 0;
}
