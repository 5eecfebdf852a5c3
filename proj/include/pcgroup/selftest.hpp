#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcgroup/axioms.hpp"
#include "pcgroup/calculus.hpp"
#include "pcgroup/chain.hpp"
#include "pcgroup/corpus.hpp"
#include "pcgroup/json_io.hpp"
#include "pcgroup/oracle.hpp"

// The acceptance suite: eight criteria over the built-in corpus, everything
// a pure function of (corpus, seed). Runtime budgets are pinned in code next
// to the criterion they belong to. Criterion details never contain timings,
// so two runs with the same inputs serialize identically.

namespace pcgroup::selftest {

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  Json details;
};

struct Options {
  std::uint64_t seed = 1;
  std::string corpus_dir;  // empty: use the built-in corpus
};

namespace detail {

inline double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace detail

inline std::vector<CorpusEntry> load_corpus(const Options& opts) {
  if (opts.corpus_dir.empty()) return builtin_corpus();
  std::vector<CorpusEntry> corpus;
  for (const auto& entry : builtin_corpus()) {
    corpus.push_back(
        {entry.name,
         load_graph_file(opts.corpus_dir + "/" + entry.name + ".json")});
  }
  return corpus;
}

// 1. normalize agrees with the exhaustive rewriting oracle on every word of
//    at most 6 letters over every corpus graph; budget 120 s.
inline Criterion oracle_equivalence(const std::vector<CorpusEntry>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t words = 0, mismatches = 0;
  Json samples = Json::array();
  for (const auto& entry : corpus) {
    oracle::RewritingOracle orc(entry.graph);
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const auto& lw : oracle::all_letter_words(*entry.graph, len)) {
        ++words;
        Word raw(entry.graph, oracle::to_letter_syllables(*entry.graph, lw));
        const NormalForm got = normalize(raw);
        const auto canon = orc.canonical(lw);
        if (got.syllables() != oracle::to_syllables(*entry.graph, canon) ||
            got.length() != canon.size()) {
          ++mismatches;
          if (samples.size() < 5) {
            samples.push_back({{"graph", entry.name}, {"word", raw.str()}});
          }
        }
      }
    }
  }
  const bool within_budget = detail::seconds_since(start) < 120.0;
  Criterion c{1, "oracle equivalence of normal forms", false, {}};
  c.details["words_checked"] = words;
  c.details["mismatches"] = mismatches;
  c.details["mismatch_samples"] = samples;
  c.details["within_budget"] = within_budget;
  c.pass = mismatches == 0 && within_budget;
  return c;
}

// 2. lg equals Cayley-graph BFS distance from e for every element of lg <= 5.
inline Criterion geodesic_length(const std::vector<CorpusEntry>& corpus) {
  std::uint64_t elements = 0, mismatches = 0;
  for (const auto& entry : corpus) {
    for (const auto& [x, d] : oracle::cayley_distances(entry.graph, 5)) {
      ++elements;
      if (x.length() != d) ++mismatches;
    }
  }
  Criterion c{2, "geodesic length equals Cayley BFS distance", false, {}};
  c.details["elements_checked"] = elements;
  c.details["mismatches"] = mismatches;
  c.pass = mismatches == 0;
  return c;
}

// 3. Power length laws: lg(f^k) = k lg(f) for cyclically reduced f, and
//    lg(x^k) = k lg(core) + 2 lg(conjugator), exactly, lg <= 4, k <= 4.
inline Criterion power_length_laws(const std::vector<CorpusEntry>& corpus) {
  std::uint64_t checks = 0, violations = 0;
  for (const auto& entry : corpus) {
    if (!entry.graph->torsion_free()) continue;
    for (const auto& x : enumerate_elements(entry.graph, 4)) {
      const bool cyc = is_cyclically_reduced(x);
      for (std::int64_t k = 1; k <= 4; ++k) {
        ++checks;
        const std::uint64_t lg_pow = power(x, k).length();
        if (lg_pow != power_length(x, k)) ++violations;
        if (cyc && lg_pow != static_cast<std::uint64_t>(k) * x.length()) {
          ++violations;
        }
      }
    }
  }
  Criterion c{3, "power length laws", false, {}};
  c.details["checks"] = checks;
  c.details["violations"] = violations;
  c.pass = violations == 0;
  return c;
}

// 4. Both length-function axioms hold on every all-infinite-order corpus graph
//    with lg_max = 4, k_max = 6.
inline Criterion axiom_scan(const std::vector<CorpusEntry>& corpus) {
  Json per_graph = Json::array();
  bool all_clean = true;
  for (const auto& entry : corpus) {
    if (!entry.graph->torsion_free()) continue;
    const auto r1 = check_condition_i(entry.graph, 4, 6);
    const auto r2 = check_condition_ii(entry.graph, 4, 6);
    const bool clean = r1.clean() && r2.clean();
    all_clean = all_clean && clean;
    per_graph.push_back(
        {{"graph", entry.name},
         {"elements_checked", r1.elements_checked},
         {"condition_i_violations", r1.condition_i_violations.size()},
         {"condition_ii_violations", r2.condition_ii_violations.size()}});
  }
  Criterion c{4, "length axioms on torsion-free graphs", false, {}};
  c.details["graphs"] = per_graph;
  c.pass = all_clean;
  return c;
}

// 5. The Coxeter counterexample, exactly.
inline Criterion coxeter_counterexample() {
  const auto demo = coxeter_demo();
  const auto report = check_condition_ii(demo.graph, 2, 3);
  bool witness_found = false;
  for (const auto& v : report.condition_ii_violations) {
    if (v.x == demo.ab && v.k == 3 && v.y == demo.ab) witness_found = true;
  }
  Criterion c{5, "Coxeter counterexample", false, {}};
  c.details["lg_ab"] = demo.lg_ab;
  c.details["square_is_identity"] = demo.square_is_identity;
  c.details["cube_equals_ab"] = demo.cube_equals_ab;
  c.details["ab_nontrivial"] = demo.ab_nontrivial;
  c.details["condition_ii_witness_found"] = witness_found;
  c.pass = demo.lg_ab == 2 && demo.square_is_identity &&
           demo.cube_equals_ab && demo.ab_nontrivial && witness_found;
  return c;
}

// 6. unique_root agrees with the enumeration-based roots on every
//    torsion-free corpus element with lg <= 5, k <= 4; never more than one
//    root.
inline Criterion root_agreement(const std::vector<CorpusEntry>& corpus) {
  std::uint64_t checks = 0, disagreements = 0, multi_root = 0;
  for (const auto& entry : corpus) {
    if (!entry.graph->torsion_free()) continue;
    for (const auto& g : enumerate_elements(entry.graph, 5)) {
      for (std::int64_t k = 1; k <= 4; ++k) {
        ++checks;
        const auto all = roots(g, k, g.length());
        if (all.size() > 1) ++multi_root;
        const auto fast = unique_root(g, k);
        const bool agree = all.empty() ? !fast.has_value()
                                       : fast.has_value() &&
                                             *fast == all.front();
        if (!agree) ++disagreements;
      }
    }
  }
  Criterion c{6, "root extraction agrees with the enumeration oracle", false,
              {}};
  c.details["checks"] = checks;
  c.details["disagreements"] = disagreements;
  c.details["multi_root_cases"] = multi_root;
  c.pass = disagreements == 0 && multi_root == 0;
  return c;
}

// 7. Chain replay fidelity on free_2 with g = (a, a, a), c0 = e and
//    eta(n) = f2(n+2) + 1; budget 10 s.
inline Criterion chain_fidelity() {
  const auto start = std::chrono::steady_clock::now();
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  NormalForm a = normalize(parse_word("a", free2));
  auto probe =
      ChainConfig::validate(free2, {a, a, a}, {2, 3, 4}, identity(free2));
  const auto tables = bounds(probe);
  std::vector<std::int64_t> eta;
  for (std::size_t n = 0; n < 3; ++n) {
    eta.push_back(static_cast<std::int64_t>(tables.f2[n + 2]) + 1);
  }
  auto cfg = ChainConfig::validate(free2, {a, a, a}, eta, identity(free2));
  const auto trace = replay(cfg, 3);
  const auto witness = witness_index(cfg.eta(), tables.f2);

  const bool terminated =
      trace.final_outcome == ChainOutcome::kUnsolvable ||
      trace.final_outcome == ChainOutcome::kContradiction;
  const bool early = witness.has_value() && !trace.steps.empty() &&
                     trace.steps.back().index <= *witness + 2;
  bool witness_inequalities = witness.has_value();
  if (witness.has_value()) {
    for (const auto& step : trace.steps) {
      if (step.index == *witness) {
        witness_inequalities = step.star_holds && step.star_star_holds;
      }
    }
  }
  const bool claim = claim_check(trace, tables);
  const bool within_budget = detail::seconds_since(start) < 10.0;

  Criterion c{7, "chain replay fidelity", false, {}};
  c.details["eta"] = eta;
  c.details["witness_index"] = witness ? Json(*witness) : Json(nullptr);
  c.details["final_outcome"] = to_string(trace.final_outcome);
  c.details["last_step"] =
      trace.steps.empty() ? Json(nullptr) : Json(trace.steps.back().index);
  c.details["claim_check"] = claim;
  c.details["witness_inequalities"] = witness_inequalities;
  c.details["within_budget"] = within_budget;
  c.pass = terminated && early && witness_inequalities && claim &&
           within_budget;
  return c;
}

inline Json criteria_to_json(const std::vector<Criterion>& criteria) {
  Json arr = Json::array();
  for (const auto& c : criteria) {
    arr.push_back({{"id", c.id},
                   {"name", c.name},
                   {"pass", c.pass},
                   {"details", c.details}});
  }
  return arr;
}

inline std::vector<Criterion> evaluate_core(
    const std::vector<CorpusEntry>& corpus) {
  return {oracle_equivalence(corpus), geodesic_length(corpus),
          power_length_laws(corpus),  axiom_scan(corpus),
          coxeter_counterexample(),   root_agreement(corpus),
          chain_fidelity()};
}

// 8. Round-trip identities for the graph and word formats, plus determinism:
//    evaluating criteria 1-7 twice yields identical reports.
inline Criterion determinism_and_roundtrip(
    const std::vector<CorpusEntry>& corpus, std::uint64_t seed,
    const std::vector<Criterion>& first_run) {
  std::uint64_t graph_roundtrips = 0, word_roundtrips = 0, failures = 0;
  for (const auto& entry : corpus) {
    ++graph_roundtrips;
    const Json j = graph_to_json(*entry.graph);
    if (!(graph_from_json(j) == *entry.graph) ||
        graph_to_json(graph_from_json(j)).dump(2) != j.dump(2)) {
      ++failures;
    }
    if (entry.graph->vertex_count() == 0) continue;
    for (std::uint64_t i = 0; i < 10; ++i) {
      ++word_roundtrips;
      Word w = random_word(entry.graph, i + 1, seed * 1000 + i);
      if (parse_word(w.str(), entry.graph).syllables() != w.syllables()) {
        ++failures;
      }
      NormalForm x = normalize(w);
      if (!(normalize(parse_word(x.str(), entry.graph)) == x)) ++failures;
    }
  }
  const Json second_run = criteria_to_json(evaluate_core(corpus));
  const bool deterministic =
      criteria_to_json(first_run).dump(2) == second_run.dump(2);

  Criterion c{8, "determinism and format round-trips", false, {}};
  c.details["graph_roundtrips"] = graph_roundtrips;
  c.details["word_roundtrips"] = word_roundtrips;
  c.details["roundtrip_failures"] = failures;
  c.details["deterministic"] = deterministic;
  c.pass = failures == 0 && deterministic;
  return c;
}

struct SuiteResult {
  std::vector<Criterion> criteria;
  bool all_pass = false;
};

inline SuiteResult run_suite(const Options& opts) {
  const auto corpus = load_corpus(opts);
  SuiteResult result;
  result.criteria = evaluate_core(corpus);
  result.criteria.push_back(
      determinism_and_roundtrip(corpus, opts.seed, result.criteria));
  result.all_pass = true;
  for (const auto& c : result.criteria) result.all_pass &= c.pass;
  return result;
}

}  // namespace pcgroup::selftest
