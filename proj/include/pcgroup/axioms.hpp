#pragma once

#include <cstdint>
#include <vector>

#include "pcgroup/calculus.hpp"
#include "pcgroup/word.hpp"

namespace pcgroup {

// Witness against condition (i): lg(x) > lg(x^k).
struct ConditionIViolation {
  NormalForm x;
  std::int64_t k;
};

// Witness against condition (ii): x^k = y with lg(y) < k and x != e.
struct ConditionIIViolation {
  NormalForm x;
  std::int64_t k;
  NormalForm y;
};

struct AxiomReport {
  std::vector<ConditionIViolation> condition_i_violations;
  std::vector<ConditionIIViolation> condition_ii_violations;
  std::uint64_t elements_checked = 0;
  std::uint64_t lg_max = 0;
  std::int64_t k_max = 0;

  bool clean() const {
    return condition_i_violations.empty() && condition_ii_violations.empty();
  }
};

// Exhaustive scan of condition (i), lg(x) <= lg(x^k), over the ball
// lg(x) <= lg_max and k in 1..k_max. Witnesses come out ordered by
// (lg, ShortLex, k).
inline AxiomReport check_condition_i(const GraphPtr& graph,
                                     std::uint64_t lg_max, std::int64_t k_max,
                                     std::uint64_t ceiling = kEnumerationCeiling) {
  AxiomReport report;
  report.lg_max = lg_max;
  report.k_max = k_max;
  for (const auto& x : enumerate_elements(graph, lg_max, ceiling)) {
    ++report.elements_checked;
    NormalForm xk = identity(graph);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      xk = multiply(xk, x);
      if (x.length() > xk.length()) {
        report.condition_i_violations.push_back({x, k});
      }
    }
  }
  return report;
}

// Exhaustive scan of condition (ii): flags every x != e with x^k = y and
// lg(y) < k.
inline AxiomReport check_condition_ii(const GraphPtr& graph,
                                      std::uint64_t lg_max, std::int64_t k_max,
                                      std::uint64_t ceiling = kEnumerationCeiling) {
  AxiomReport report;
  report.lg_max = lg_max;
  report.k_max = k_max;
  for (const auto& x : enumerate_elements(graph, lg_max, ceiling)) {
    ++report.elements_checked;
    NormalForm xk = identity(graph);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      xk = multiply(xk, x);
      if (xk.length() < static_cast<std::uint64_t>(k) && !x.is_identity()) {
        report.condition_ii_violations.push_back({x, k, xk});
      }
    }
  }
  return report;
}

// The Coxeter counterexample on K2 with both generators involutions:
// lg(ab) = 2, (ab)^2 = e, (ab)^3 = ab, ab != e. Every equality is computed
// in-engine.
struct CoxeterDemo {
  GraphPtr graph;
  NormalForm ab;
  NormalForm ab_squared;
  NormalForm ab_cubed;
  std::uint64_t lg_ab;
  bool square_is_identity;
  bool cube_equals_ab;
  bool ab_nontrivial;
};

inline CoxeterDemo coxeter_demo() {
  GraphPtr graph = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  NormalForm ab = normalize(parse_word("a b", graph));
  NormalForm sq = power(ab, 2);
  NormalForm cube = power(ab, 3);
  return CoxeterDemo{graph,
                     ab,
                     sq,
                     cube,
                     ab.length(),
                     sq.is_identity(),
                     cube == ab,
                     !(ab == identity(graph))};
}

}  // namespace pcgroup
