#pragma once

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pcgroup/axioms.hpp"
#include "pcgroup/calculus.hpp"
#include "pcgroup/chain.hpp"
#include "pcgroup/json_io.hpp"
#include "pcgroup/selftest.hpp"

namespace pcgroup::cli {

struct CommandOutput {
  int exit_code = 0;
  Json report;
  std::string human;
};

namespace detail {

inline Json base_report(const std::string& command, Json inputs) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

inline std::string quoted(const std::string& s) { return "'" + s + "'"; }

inline std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!csv.empty() && csv.back() == ',') out.push_back("");
  return out;
}

inline std::vector<std::int64_t> parse_int_csv(const std::string& csv) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_csv(csv)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad integer in list: '" + item + "'");
    }
  }
  return out;
}

inline Json violations_to_json(const AxiomReport& r) {
  Json j;
  j["lg_max"] = r.lg_max;
  j["k_max"] = r.k_max;
  j["elements_checked"] = r.elements_checked;
  Json wi = Json::array();
  for (const auto& v : r.condition_i_violations) {
    wi.push_back({{"x", v.x.str()}, {"k", v.k}});
  }
  Json wii = Json::array();
  for (const auto& v : r.condition_ii_violations) {
    wii.push_back({{"x", v.x.str()}, {"k", v.k}, {"y", v.y.str()}});
  }
  j["condition_i_witnesses"] = std::move(wi);
  j["condition_ii_witnesses"] = std::move(wii);
  return j;
}

}  // namespace detail

inline CommandOutput cmd_normalize(const std::string& graph_path,
                                   const std::string& word_text) {
  GraphPtr graph = load_graph_file(graph_path);
  NormalForm x = normalize(parse_word(word_text, graph));
  Json report = detail::base_report(
      "normalize", {{"graph", graph_path}, {"word", word_text}});
  report["outputs"] = {{"canonical", x.str()}, {"lg", x.length()}};
  std::ostringstream human;
  human << "canonical: " << detail::quoted(x.str()) << "\n"
        << "lg: " << x.length() << "\n";
  return {0, std::move(report), human.str()};
}

inline CommandOutput cmd_power_root(const std::string& graph_path,
                                    const std::string& word_text,
                                    std::int64_t k, const std::string& mode) {
  GraphPtr graph = load_graph_file(graph_path);
  NormalForm x = normalize(parse_word(word_text, graph));
  Json report = detail::base_report(
      mode,
      {{"graph", graph_path}, {"word", word_text}, {"k", k}, {"mode", mode}});
  std::ostringstream human;
  if (mode == "power") {
    NormalForm y = power(x, k);
    Json predicted = nullptr;
    Json agrees = nullptr;
    if (k >= 1 && graph->torsion_free()) {
      const std::uint64_t p = power_length(x, k);
      predicted = p;
      agrees = p == y.length();
    }
    report["outputs"] = {{"result", y.str()},
                         {"lg", y.length()},
                         {"predicted_lg", predicted},
                         {"prediction_agrees", agrees}};
    human << "result: " << detail::quoted(y.str()) << "\n"
          << "lg: " << y.length() << "\n"
          << "predicted_lg: " << predicted.dump() << "\n"
          << "prediction_agrees: " << agrees.dump() << "\n";
    return {0, std::move(report), human.str()};
  }
  auto root = unique_root(x, k);  // rejects torsion presentations
  report["outputs"] = {{"root", root ? Json(root->str()) : Json(nullptr)},
                       {"exists", root.has_value()}};
  human << "root: " << (root ? detail::quoted(root->str()) : "none") << "\n";
  return {0, std::move(report), human.str()};
}

inline CommandOutput cmd_axioms(const std::string& graph_path,
                                std::uint64_t lg_max, std::int64_t k_max) {
  GraphPtr graph = load_graph_file(graph_path);
  const AxiomReport r1 = check_condition_i(graph, lg_max, k_max);
  const AxiomReport r2 = check_condition_ii(graph, lg_max, k_max);
  const bool clean = r1.clean() && r2.clean();
  Json report = detail::base_report(
      "axioms",
      {{"graph", graph_path}, {"lg_max", lg_max}, {"k_max", k_max}});
  report["outputs"] = {{"condition_i", detail::violations_to_json(r1)},
                       {"condition_ii", detail::violations_to_json(r2)},
                       {"clean", clean}};
  std::ostringstream human;
  human << "condition (i): " << r1.condition_i_violations.size()
        << " violations over " << r1.elements_checked << " elements\n";
  for (const auto& v : r1.condition_i_violations) {
    human << "  (x=" << detail::quoted(v.x.str()) << ", k=" << v.k << ")\n";
  }
  human << "condition (ii): " << r2.condition_ii_violations.size()
        << " violations over " << r2.elements_checked << " elements\n";
  for (const auto& v : r2.condition_ii_violations) {
    human << "  (x=" << detail::quoted(v.x.str()) << ", k=" << v.k
          << ", y=" << detail::quoted(v.y.str()) << ")\n";
  }
  human << "clean: " << (clean ? "yes" : "no") << "\n";
  return {clean ? 0 : 1, std::move(report), human.str()};
}

inline CommandOutput cmd_chain(const std::string& graph_path,
                               const std::string& g_csv,
                               const std::string& eta_csv,
                               const std::string& c0_text,
                               std::optional<std::size_t> max_steps) {
  GraphPtr graph = load_graph_file(graph_path);
  std::vector<NormalForm> g_seq;
  for (const auto& text : detail::split_csv(g_csv)) {
    g_seq.push_back(normalize(parse_word(text, graph)));
  }
  const auto eta = detail::parse_int_csv(eta_csv);
  NormalForm c0 = normalize(parse_word(c0_text, graph));
  auto cfg = ChainConfig::validate(graph, g_seq, eta, c0);
  const auto tables = bounds(cfg);
  const std::size_t steps = max_steps.value_or(cfg.g_seq().size());
  const auto trace = replay(cfg, steps);
  const auto witness = witness_index(cfg.eta(), tables.f2);
  const bool claim = claim_check(trace, tables);

  Json steps_json = Json::array();
  for (const auto& s : trace.steps) {
    Json roots_json = Json::array();
    for (const auto& r : s.roots_found) roots_json.push_back(r.str());
    steps_json.push_back({{"n", s.index},
                          {"rhs", s.rhs.str()},
                          {"lg_rhs", s.rhs.length()},
                          {"eta", s.eta_n},
                          {"roots", std::move(roots_json)},
                          {"outcome", to_string(s.outcome)},
                          {"star", s.star_holds},
                          {"star_star", s.star_star_holds}});
  }
  Json report = detail::base_report("chain", {{"graph", graph_path},
                                              {"g", g_csv},
                                              {"eta", eta_csv},
                                              {"c0", c0_text},
                                              {"max_steps", steps}});
  report["outputs"] = {{"m_star", cfg.m_star()},
                       {"f1", tables.f1},
                       {"f2", tables.f2},
                       {"witness_index",
                        witness ? Json(*witness) : Json(nullptr)},
                       {"steps", std::move(steps_json)},
                       {"final_outcome", to_string(trace.final_outcome)},
                       {"claim_check", claim}};

  std::ostringstream human;
  human << "m_star: " << cfg.m_star() << "\nf1:";
  for (auto v : tables.f1) human << " " << v;
  human << "\nf2:";
  for (auto v : tables.f2) human << " " << v;
  human << "\nwitness_index: "
        << (witness ? std::to_string(*witness) : "none") << "\n";
  for (const auto& s : trace.steps) {
    human << "step " << s.index << ": rhs=" << detail::quoted(s.rhs.str())
          << " lg=" << s.rhs.length() << " eta=" << s.eta_n << " outcome="
          << to_string(s.outcome) << " star=" << (s.star_holds ? 1 : 0)
          << " star_star=" << (s.star_star_holds ? 1 : 0);
    if (!s.roots_found.empty()) {
      human << " root=" << detail::quoted(s.roots_found.front().str());
    }
    human << "\n";
  }
  human << "final: " << to_string(trace.final_outcome) << "\n"
        << "claim_check: " << (claim ? "true" : "false") << "\n";
  return {0, std::move(report), human.str()};
}

inline CommandOutput cmd_demo_coxeter() {
  const auto demo = coxeter_demo();
  Json report = detail::base_report("demo-coxeter", Json::object());
  report["outputs"] = {{"ab", demo.ab.str()},
                       {"lg_ab", demo.lg_ab},
                       {"ab_squared", demo.ab_squared.str()},
                       {"square_is_identity", demo.square_is_identity},
                       {"ab_cubed", demo.ab_cubed.str()},
                       {"cube_equals_ab", demo.cube_equals_ab},
                       {"ab_nontrivial", demo.ab_nontrivial}};
  std::ostringstream human;
  human << "lg(ab) = " << demo.lg_ab << "\n"
        << "(ab)^2 = " << detail::quoted(demo.ab_squared.str())
        << " identity: " << (demo.square_is_identity ? "yes" : "no") << "\n"
        << "(ab)^3 = " << detail::quoted(demo.ab_cubed.str())
        << " equals ab: " << (demo.cube_equals_ab ? "yes" : "no") << "\n"
        << "ab != e: " << (demo.ab_nontrivial ? "yes" : "no") << "\n";
  return {0, std::move(report), human.str()};
}

inline CommandOutput cmd_selftest(std::uint64_t seed,
                                  const std::string& corpus_dir) {
  selftest::Options opts;
  opts.seed = seed;
  opts.corpus_dir = corpus_dir;
  const auto result = selftest::run_suite(opts);
  Json report = detail::base_report(
      "selftest",
      {{"seed", seed},
       {"corpus_dir",
        corpus_dir.empty() ? Json(nullptr) : Json(corpus_dir)}});
  report["outputs"] = {
      {"criteria", selftest::criteria_to_json(result.criteria)},
      {"all_pass", result.all_pass}};
  std::ostringstream human;
  for (const auto& c : result.criteria) {
    human << "[" << c.id << "/" << result.criteria.size() << "] "
          << (c.pass ? "PASS" : "FAIL") << " " << c.name << "\n";
  }
  human << "all pass: " << (result.all_pass ? "yes" : "no") << "\n";
  return {result.all_pass ? 0 : 1, std::move(report), human.str()};
}

// Entry point shared by the binary and the tests. `args` excludes the
// program name. Exit codes: 0 success (for axioms: no violations; for
// selftest: all criteria pass), 1 domain failure, 2 parse/validation errors.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"word calculus for graph products of cyclic groups"};
  app.require_subcommand(1);

  std::string graph_path, word_text, g_csv, eta_csv, c0_text = "";
  std::int64_t k = 1;
  std::uint64_t lg_max = 3;
  std::int64_t k_max = 4;
  std::uint64_t seed = 1;
  std::string corpus_dir;
  std::optional<std::size_t> max_steps;
  bool as_json = false;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "emit the machine-readable report");
  };

  auto* norm = app.add_subcommand("normalize", "canonical form and lg");
  norm->add_option("--graph", graph_path, "graph JSON file")->required();
  norm->add_option("--word", word_text, "word text")->required();
  add_json(norm);

  auto* pow = app.add_subcommand("power", "x^k with the predicted length");
  pow->add_option("--graph", graph_path)->required();
  pow->add_option("--word", word_text)->required();
  pow->add_option("--k", k)->required();
  add_json(pow);

  auto* root = app.add_subcommand("root", "unique k-th root, if any");
  root->add_option("--graph", graph_path)->required();
  root->add_option("--word", word_text)->required();
  root->add_option("--k", k)->required();
  add_json(root);

  auto* axioms = app.add_subcommand("axioms", "scan both length axioms");
  axioms->add_option("--graph", graph_path)->required();
  axioms->add_option("--lg-max", lg_max)->required();
  axioms->add_option("--k-max", k_max)->required();
  add_json(axioms);

  auto* chain = app.add_subcommand("chain", "replay the equation chain");
  chain->add_option("--graph", graph_path)->required();
  chain->add_option("--g", g_csv, "comma-separated image words")->required();
  chain->add_option("--eta", eta_csv, "comma-separated exponents")->required();
  chain->add_option("--c0", c0_text, "start value (default identity)");
  chain->add_option("--max-steps", max_steps);
  add_json(chain);

  auto* demo = app.add_subcommand("demo-coxeter", "the Coxeter counterexample");
  add_json(demo);

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--seed", seed);
  self->add_option("--corpus-dir", corpus_dir,
                   "load the corpus from JSON files instead of built-ins");
  add_json(self);

  std::vector<const char*> argv{"pcgroup"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    CommandOutput result;
    if (norm->parsed()) {
      result = cmd_normalize(graph_path, word_text);
    } else if (pow->parsed()) {
      result = cmd_power_root(graph_path, word_text, k, "power");
    } else if (root->parsed()) {
      result = cmd_power_root(graph_path, word_text, k, "root");
    } else if (axioms->parsed()) {
      result = cmd_axioms(graph_path, lg_max, k_max);
    } else if (chain->parsed()) {
      result = cmd_chain(graph_path, g_csv, eta_csv, c0_text, max_steps);
    } else if (demo->parsed()) {
      result = cmd_demo_coxeter();
    } else {
      result = cmd_selftest(seed, corpus_dir);
    }
    if (as_json) {
      result.report["timing_ms"] =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
      out << result.report.dump(2) << "\n";
    } else {
      out << result.human;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pcgroup::cli
