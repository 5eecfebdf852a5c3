#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcgroup/chain.hpp"
#include "pcgroup/corpus.hpp"

using namespace pcgroup;

namespace {

NormalForm nf(const std::string& text, const GraphPtr& g) {
  return normalize(parse_word(text, g));
}

ChainConfig basic_cfg(const GraphPtr& free2) {
  NormalForm a = nf("a", free2);
  return ChainConfig::validate(free2, {a, a, a}, {7, 11, 16},
                               identity(free2));
}

}  // namespace

TEST_CASE("chain config validation") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  NormalForm a = nf("a", free2);

  CHECK_THROWS_WITH_AS(
      ChainConfig::validate(cox, {nf("a", cox)}, {2}, identity(cox)),
      doctest::Contains("torsion-free"), ValidationError);
  CHECK_THROWS_WITH_AS(
      ChainConfig::validate(free2, {identity(free2)}, {2}, identity(free2)),
      doctest::Contains("trivial g entry"), ValidationError);
  CHECK_THROWS_WITH_AS(
      ChainConfig::validate(free2, {a, a}, {3, 3}, identity(free2)),
      doctest::Contains("strictly increasing"), ValidationError);
  CHECK_THROWS_WITH_AS(
      ChainConfig::validate(free2, {a, a}, {3}, identity(free2)),
      doctest::Contains("length mismatch"), ValidationError);
  CHECK_THROWS_WITH_AS(
      ChainConfig::validate(free2, {a}, {0}, identity(free2)),
      doctest::Contains("positive"), ValidationError);
}

TEST_CASE("bounds: minimal increasing f1 and the exact f2 sum") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto t = bounds(basic_cfg(free2));

  // lg(a) = 1 everywhere, m_* = 0; tables extend two entries past g_seq.
  REQUIRE(t.f1.size() == 5);
  REQUIRE(t.f2.size() == 6);
  CHECK(t.f1 == std::vector<std::uint64_t>{2, 3, 4, 5, 6});
  CHECK(t.f2 == std::vector<std::uint64_t>{1, 3, 6, 10, 15, 21});
}

TEST_CASE("bounds: empty g sequence and longer images") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto empty = ChainConfig::validate(free2, {}, {}, identity(free2));
  auto t0 = bounds(empty);
  CHECK(t0.f2[0] == 1);  // m_* + 1 with the empty sum

  // A length-3 image forces f1(0) = 4.
  auto cfg = ChainConfig::validate(free2, {nf("a b a", free2)}, {9},
                                   nf("b^2", free2));
  auto t1 = bounds(cfg);
  CHECK(t1.f2[0] == 3);  // m_* = 2
  CHECK(t1.f1[0] == 4);
  CHECK(t1.f2[1] == 7);
}

TEST_CASE("bound tables are strictly increasing and telescope") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<NormalForm> gs;
    std::vector<std::int64_t> eta;
    std::int64_t e = 1 + static_cast<std::int64_t>(seed % 3);
    for (std::size_t n = 0; n < 1 + seed % 4; ++n) {
      NormalForm g = normalize(random_word(free2, 1 + (seed + n) % 3,
                                           seed * 31 + n));
      if (g.is_identity()) g = nf("a", free2);
      gs.push_back(g);
      e += 1 + static_cast<std::int64_t>((seed + n) % 3);
      eta.push_back(e);
    }
    auto cfg = ChainConfig::validate(free2, gs, eta,
                                     normalize(random_word(free2, seed % 3,
                                                           seed)));
    auto t = bounds(cfg);
    for (std::size_t n = 0; n < gs.size(); ++n) {
      CHECK(t.f1[n] > gs[n].length());
    }
    for (std::size_t n = 0; n + 1 < t.f1.size(); ++n) {
      CHECK(t.f1[n] < t.f1[n + 1]);
    }
    for (std::size_t n = 0; n + 1 < t.f2.size(); ++n) {
      CHECK(t.f2[n] < t.f2[n + 1]);
      CHECK(t.f2[n + 1] - t.f2[n] == t.f1[n]);
    }
    CHECK(t.f2[0] == cfg.m_star() + 1);
  }
}

TEST_CASE("witness_index: first eta entry clearing f2(n+2)") {
  std::vector<std::uint64_t> f2{1, 3, 6, 10, 15};
  CHECK(witness_index({100, 101, 102}, f2) == std::size_t{0});
  CHECK_FALSE(witness_index({1, 2, 3}, {5, 10, 15, 20, 25}).has_value());
  // Strict inequality: eta(n) == f2(n+2) is not a witness.
  CHECK_FALSE(witness_index({6, 9}, f2).has_value());
  CHECK(witness_index({6, 11}, f2) == std::size_t{1});
}

TEST_CASE("replay: no root of a single generator") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  NormalForm a = nf("a", free2);
  auto cfg = ChainConfig::validate(free2, {a, a}, {6, 7}, identity(free2));
  auto trace = replay(cfg, 2);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].outcome == StepOutcome::kUnsolvable);
  CHECK(trace.steps[0].rhs == a);
  CHECK(trace.steps[0].roots_found.empty());
  CHECK(trace.final_outcome == ChainOutcome::kUnsolvable);
}

TEST_CASE("replay: extension by an extracted square root") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto cfg = ChainConfig::validate(free2, {nf("a^4", free2)}, {2},
                                   identity(free2));
  auto trace = replay(cfg, 1);
  REQUIRE(trace.steps.size() == 1);
  const auto& step = trace.steps[0];
  CHECK(step.outcome == StepOutcome::kExtended);
  REQUIRE(step.roots_found.size() == 1);
  CHECK(step.roots_found[0].str() == "a^2");
  CHECK(power(step.roots_found[0], step.eta_n) == step.rhs);
  CHECK(trace.final_outcome == ChainOutcome::kExhausted);
  CHECK(claim_check(trace, bounds(cfg)));
}

TEST_CASE("replay: forced identity then the terminal contradiction") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  NormalForm a = nf("a", free2);
  // c0 = a and g_0 = a^-1 make the first right-hand side trivial.
  auto cfg = ChainConfig::validate(free2, {invert(a), nf("b", free2)},
                                   {3, 5}, a);
  auto trace = replay(cfg, 2);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].outcome == StepOutcome::kForcedIdentity);
  CHECK(trace.steps[0].rhs.is_identity());
  CHECK(trace.steps[0].roots_found[0].is_identity());
  CHECK(trace.steps[1].outcome == StepOutcome::kContradiction);
  CHECK(trace.final_outcome == ChainOutcome::kContradiction);

  // The contradiction re-verifies: g_1 != e, eta(1) > lg(g_1), no root.
  CHECK_FALSE(cfg.g_seq()[1].is_identity());
  CHECK(static_cast<std::uint64_t>(cfg.eta()[1]) > cfg.g_seq()[1].length());
  CHECK(roots(cfg.g_seq()[1], cfg.eta()[1], cfg.g_seq()[1].length()).empty());
}

TEST_CASE("replay rejects more steps than equations") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto cfg = basic_cfg(free2);
  CHECK_THROWS_AS(replay(cfg, 4), ValidationError);
}

TEST_CASE("claim_check flags a violating trace") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto cfg = ChainConfig::validate(free2, {nf("a^4", free2)}, {2},
                                   identity(free2));
  auto trace = replay(cfg, 1);
  auto tables = bounds(cfg);
  CHECK(claim_check(trace, tables));
  // Tighten f2 below the realized lg(c_1) = 2.
  tables.f2[1] = 2;
  CHECK_FALSE(claim_check(trace, tables));
  tables.f2 = {1};
  CHECK_THROWS_AS(claim_check(trace, tables), ValidationError);
}

TEST_CASE("acceptance-style run: eta derived from the bound tables") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  NormalForm a = nf("a", free2);
  auto probe = ChainConfig::validate(free2, {a, a, a}, {100, 101, 102},
                                     identity(free2));
  auto tables = bounds(probe);
  std::vector<std::int64_t> eta;
  for (std::size_t n = 0; n < 3; ++n) {
    eta.push_back(static_cast<std::int64_t>(tables.f2[n + 2]) + 1);
  }
  auto cfg = ChainConfig::validate(free2, {a, a, a}, eta, identity(free2));
  auto trace = replay(cfg, 3);
  auto w = witness_index(cfg.eta(), tables.f2);
  REQUIRE(w.has_value());
  CHECK(*w == 0);
  CHECK(trace.final_outcome == ChainOutcome::kUnsolvable);
  CHECK(trace.steps.back().index <= *w + 2);
  CHECK(trace.steps.back().star_holds);
  CHECK(trace.steps.back().star_star_holds);
  CHECK(claim_check(trace, tables));
}

TEST_CASE("witness inevitability and cascade fidelity on generated chains") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto ab2 = make_standard_graph(StandardGraph::kAbelianN, 2);
  for (const auto& graph : {free2, ab2}) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      std::vector<NormalForm> gs;
      std::vector<std::int64_t> eta;
      std::int64_t e = static_cast<std::int64_t>(seed % 5);
      for (std::size_t n = 0; n < 1 + seed % 3; ++n) {
        NormalForm g =
            normalize(random_word(graph, 1 + (seed + n) % 2, seed * 97 + n));
        if (g.is_identity()) {
          g = normalize(parse_word("a", graph));
        }
        gs.push_back(g);
        e += 1 + static_cast<std::int64_t>((seed * 7 + n) % 4);
        eta.push_back(e);
      }
      auto cfg = ChainConfig::validate(graph, gs, eta, identity(graph));
      auto tables = bounds(cfg);
      auto trace = replay(cfg, gs.size());
      CHECK(claim_check(trace, tables));

      for (const auto& step : trace.steps) {
        // Wherever eta(n) > lg(rhs) and a root exists, it is trivial.
        if (static_cast<std::uint64_t>(step.eta_n) > step.rhs.length() &&
            !step.roots_found.empty()) {
          CHECK(step.roots_found[0].is_identity());
        }
        if (step.outcome == StepOutcome::kExtended ||
            step.outcome == StepOutcome::kForcedIdentity) {
          CHECK(power(step.roots_found[0], step.eta_n) == step.rhs);
        }
        if (step.outcome == StepOutcome::kContradiction) {
          REQUIRE(step.index > 0);
          CHECK(trace.steps[step.index - 1].outcome ==
                StepOutcome::kForcedIdentity);
          CHECK(static_cast<std::uint64_t>(step.eta_n) >
                cfg.g_seq()[step.index].length());
          CHECK(roots(cfg.g_seq()[step.index], step.eta_n,
                      cfg.g_seq()[step.index].length())
                    .empty());
        }
      }

      if (auto w = witness_index(cfg.eta(), tables.f2)) {
        bool nontrivial_past_witness = false;
        for (const auto& step : trace.steps) {
          if (step.index > *w + 1 &&
              step.outcome == StepOutcome::kExtended) {
            nontrivial_past_witness = true;
          }
          if (step.index == *w) {
            CHECK(step.outcome != StepOutcome::kExtended);
          }
        }
        CHECK_FALSE(nontrivial_past_witness);
      }
    }
  }
}
