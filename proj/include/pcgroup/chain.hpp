#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcgroup/calculus.hpp"
#include "pcgroup/word.hpp"

namespace pcgroup {

// Finite instance of the equation chain x_{n+1}^{eta(n)} = x_n g_n:
// a torsion-free presentation, the images g_n, the exponent sequence eta and
// the start value c_0 (whose length is m_*).
class ChainConfig {
 public:
  static ChainConfig validate(GraphPtr graph, std::vector<NormalForm> g_seq,
                              std::vector<std::int64_t> eta, NormalForm c0) {
    if (!graph) throw ValidationError("chain needs a presentation");
    if (!graph->torsion_free()) {
      throw ValidationError("chain requires a torsion-free presentation");
    }
    if (g_seq.size() != eta.size()) {
      throw ValidationError("eta/g sequence length mismatch: " +
                            std::to_string(eta.size()) + " vs " +
                            std::to_string(g_seq.size()));
    }
    for (std::size_t n = 0; n < g_seq.size(); ++n) {
      detail::require_same_graph(graph, g_seq[n].graph());
      if (g_seq[n].is_identity()) {
        throw ValidationError("trivial g entry at index " + std::to_string(n));
      }
    }
    for (std::size_t n = 0; n < eta.size(); ++n) {
      if (eta[n] < 1) {
        throw ValidationError("eta entries must be positive (index " +
                              std::to_string(n) + ")");
      }
      if (n > 0 && eta[n] <= eta[n - 1]) {
        throw ValidationError("eta must be strictly increasing (index " +
                              std::to_string(n) + ")");
      }
    }
    detail::require_same_graph(graph, c0.graph());
    return ChainConfig(std::move(graph), std::move(g_seq), std::move(eta),
                       std::move(c0));
  }

  const GraphPtr& graph() const noexcept { return graph_; }
  const std::vector<NormalForm>& g_seq() const noexcept { return g_seq_; }
  const std::vector<std::int64_t>& eta() const noexcept { return eta_; }
  const NormalForm& c0() const noexcept { return c0_; }
  std::uint64_t m_star() const noexcept { return c0_.length(); }

 private:
  ChainConfig(GraphPtr graph, std::vector<NormalForm> g_seq,
              std::vector<std::int64_t> eta, NormalForm c0)
      : graph_(std::move(graph)),
        g_seq_(std::move(g_seq)),
        eta_(std::move(eta)),
        c0_(std::move(c0)) {}

  GraphPtr graph_;
  std::vector<NormalForm> g_seq_;
  std::vector<std::int64_t> eta_;
  NormalForm c0_;
};

// The bound sequences of the argument:
//   f1(n) = max(f1(n-1) + 1, lg(g_n) + 1)   (minimal increasing choice)
//   f2(n) = (m_* + 1) + sum_{l < n} f1(l)
// For a g sequence of length N the tables extend two indices past it by the
// same minimal-increasing rule, so f2 is defined up to N + 2 and every
// witness lookup f2(n + 2) lands inside the table.
struct BoundTables {
  std::vector<std::uint64_t> f1;  // indices 0 .. N+1
  std::vector<std::uint64_t> f2;  // indices 0 .. N+2
};

inline BoundTables bounds(const ChainConfig& cfg) {
  const std::size_t n_entries = cfg.g_seq().size();
  BoundTables t;
  t.f1.reserve(n_entries + 2);
  t.f2.reserve(n_entries + 3);
  t.f2.push_back(cfg.m_star() + 1);
  for (std::size_t n = 0; n < n_entries + 2; ++n) {
    std::uint64_t floor = t.f1.empty() ? 1 : t.f1.back() + 1;
    if (n < n_entries) {
      floor = std::max(floor, cfg.g_seq()[n].length() + 1);
    }
    t.f1.push_back(floor);
    t.f2.push_back(t.f2.back() + floor);
  }
  return t;
}

// Least n with eta(n) > f2(n+2), if any.
inline std::optional<std::size_t> witness_index(
    const std::vector<std::int64_t>& eta,
    const std::vector<std::uint64_t>& f2) {
  for (std::size_t n = 0; n < eta.size(); ++n) {
    if (n + 2 >= f2.size()) break;
    if (eta[n] > 0 &&
        static_cast<std::uint64_t>(eta[n]) > f2[n + 2]) {
      return n;
    }
  }
  return std::nullopt;
}

enum class StepOutcome { kExtended, kForcedIdentity, kContradiction, kUnsolvable };
enum class ChainOutcome { kExhausted, kContradiction, kUnsolvable };

inline const char* to_string(StepOutcome o) {
  switch (o) {
    case StepOutcome::kExtended: return "extended";
    case StepOutcome::kForcedIdentity: return "forced_identity";
    case StepOutcome::kContradiction: return "contradiction";
    case StepOutcome::kUnsolvable: return "unsolvable";
  }
  return "?";
}

inline const char* to_string(ChainOutcome o) {
  switch (o) {
    case ChainOutcome::kExhausted: return "exhausted";
    case ChainOutcome::kContradiction: return "contradiction";
    case ChainOutcome::kUnsolvable: return "unsolvable";
  }
  return "?";
}

struct ChainStep {
  std::size_t index;                    // n
  NormalForm rhs;                       // c_n * g_n
  std::int64_t eta_n;
  std::vector<NormalForm> roots_found;  // what root extraction produced
  StepOutcome outcome;
  bool star_holds;       // eta(n) > f2(n+1)
  bool star_star_holds;  // eta(n) > f2(n+2)
};

struct ChainTrace {
  std::uint64_t m_star = 0;
  std::vector<ChainStep> steps;
  ChainOutcome final_outcome = ChainOutcome::kExhausted;
};

// Replays the chain forward by root extraction: at step n the next value
// c_{n+1} is the unique eta(n)-th root of c_n * g_n, when it exists. A root
// of e forces c_{n+1} = e; after such a step, an absent root with
// eta(n+1) > lg(g_{n+1}) is the argument's terminal contradiction. Each step
// records the evaluated (*) and (**) inequalities.
inline ChainTrace replay(const ChainConfig& cfg, std::size_t max_steps) {
  if (max_steps > cfg.g_seq().size()) {
    throw ValidationError("max_steps exceeds the g sequence length");
  }
  const BoundTables tables = bounds(cfg);
  ChainTrace trace;
  trace.m_star = cfg.m_star();
  NormalForm c = cfg.c0();
  bool previous_forced = false;
  for (std::size_t n = 0; n < max_steps; ++n) {
    const std::int64_t k = cfg.eta()[n];
    NormalForm rhs = multiply(c, cfg.g_seq()[n]);
    std::optional<NormalForm> root = unique_root(rhs, k);

    ChainStep step{n,
                   rhs,
                   k,
                   {},
                   StepOutcome::kUnsolvable,
                   static_cast<std::uint64_t>(k) > tables.f2[n + 1],
                   static_cast<std::uint64_t>(k) > tables.f2[n + 2]};
    if (root) {
      step.roots_found.push_back(*root);
      if (root->is_identity()) {
        step.outcome = StepOutcome::kForcedIdentity;
        previous_forced = true;
      } else {
        step.outcome = StepOutcome::kExtended;
        previous_forced = false;
      }
      c = *root;
      trace.steps.push_back(std::move(step));
      continue;
    }
    const bool terminal_contradiction =
        previous_forced &&
        static_cast<std::uint64_t>(k) > cfg.g_seq()[n].length();
    step.outcome = terminal_contradiction ? StepOutcome::kContradiction
                                          : StepOutcome::kUnsolvable;
    trace.final_outcome = terminal_contradiction ? ChainOutcome::kContradiction
                                                 : ChainOutcome::kUnsolvable;
    trace.steps.push_back(std::move(step));
    return trace;
  }
  trace.final_outcome = ChainOutcome::kExhausted;
  return trace;
}

// The inductive length bound at finite scale: lg(c_n) < f2(n) for every
// realized chain value.
inline bool claim_check(const ChainTrace& trace, const BoundTables& tables) {
  if (trace.steps.size() + 1 > tables.f2.size()) {
    throw ValidationError("trace/tables length mismatch");
  }
  if (trace.m_star >= tables.f2[0]) return false;
  for (const auto& step : trace.steps) {
    if (step.outcome == StepOutcome::kExtended ||
        step.outcome == StepOutcome::kForcedIdentity) {
      if (step.roots_found.front().length() >= tables.f2[step.index + 1]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace pcgroup
