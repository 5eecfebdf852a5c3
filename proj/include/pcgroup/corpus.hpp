#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pcgroup/presentation.hpp"

namespace pcgroup {

struct CorpusEntry {
  std::string name;
  GraphPtr graph;
};

// One order-2 vertex commuting with one of two infinite-order vertices.
inline GraphPtr mixed_graph() {
  return std::make_shared<const GraphPresentation>(GraphPresentation::validate(
      {{"t", VertexOrder::kTwo},
       {"a", VertexOrder::kInfinite},
       {"b", VertexOrder::kInfinite}},
      {{"t", "a"}}));
}

// The fixed test corpus spanning the free, abelian, path, Coxeter and mixed
// regimes.
inline std::vector<CorpusEntry> builtin_corpus() {
  return {
      {"free_1", make_standard_graph(StandardGraph::kFreeN, 1)},
      {"free_2", make_standard_graph(StandardGraph::kFreeN, 2)},
      {"abelian_2", make_standard_graph(StandardGraph::kAbelianN, 2)},
      {"abelian_3", make_standard_graph(StandardGraph::kAbelianN, 3)},
      {"path_3", make_standard_graph(StandardGraph::kPathN, 3)},
      {"coxeter_K2", make_standard_graph(StandardGraph::kCoxeterK2, 2)},
      {"mixed", mixed_graph()},
  };
}

}  // namespace pcgroup
