#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcgroup/error.hpp"

namespace pcgroup {

// Cyclic order of a vertex generator: an involution or an infinite-order
// generator. These two cases cover right-angled Coxeter and Artin groups.
enum class VertexOrder : std::uint8_t { kTwo, kInfinite };

struct VertexSpec {
  std::string name;
  VertexOrder order = VertexOrder::kInfinite;

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto tail = [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
  };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

// A finite simplicial graph with per-vertex cyclic orders. Vertices generate
// the group and adjacent vertices commute. The vertex *sequence* fixes the
// total order used by every ShortLex tie-break downstream. Immutable once
// validated; safe for unrestricted concurrent reads.
class GraphPresentation {
 public:
  // Checks all invariants and returns the presentation, or throws
  // ValidationError naming the offending token: duplicate vertex name,
  // unknown edge endpoint, self-loop, malformed identifier.
  static GraphPresentation validate(
      std::vector<VertexSpec> vertices,
      const std::vector<std::pair<std::string, std::string>>& edges) {
    GraphPresentation g;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto& v = vertices[i];
      if (!is_identifier(v.name)) {
        throw ValidationError("malformed vertex name: '" + v.name + "'");
      }
      if (!g.index_.emplace(v.name, i).second) {
        throw ValidationError("duplicate vertex name: '" + v.name + "'");
      }
    }
    g.vertices_ = std::move(vertices);
    const std::size_t n = g.vertices_.size();
    g.adj_.assign(n * n, false);
    for (const auto& [a, b] : edges) {
      auto ia = g.find(a);
      if (!ia) throw ValidationError("unknown edge endpoint: '" + a + "'");
      auto ib = g.find(b);
      if (!ib) throw ValidationError("unknown edge endpoint: '" + b + "'");
      if (*ia == *ib) throw ValidationError("self-loop at vertex: '" + a + "'");
      std::size_t u = std::min(*ia, *ib), v = std::max(*ia, *ib);
      if (!g.adj_[u * n + v]) {
        g.adj_[u * n + v] = g.adj_[v * n + u] = true;
        g.edges_.emplace_back(u, v);
      }
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const VertexSpec& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<VertexSpec>& vertices() const noexcept { return vertices_; }

  // Edges as index pairs, first < second, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges()
      const noexcept {
    return edges_;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw ValidationError("unknown vertex name: '" + std::string(name) +
                            "'");
    }
    return *i;
  }

  bool commutes(std::size_t u, std::size_t v) const {
    // Same-vertex pairs are governed by merging, not commutation.
    if (u == v) return false;
    return adj_[u * vertex_count() + v];
  }

  bool commutes(std::string_view u, std::string_view v) const {
    return commutes(index_of(u), index_of(v));
  }

  bool torsion_free() const noexcept {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const auto& v) {
      return v.order == VertexOrder::kInfinite;
    });
  }

  friend bool operator==(const GraphPresentation& a,
                         const GraphPresentation& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  GraphPresentation() = default;

  std::vector<VertexSpec> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<bool> adj_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GraphPtr = std::shared_ptr<const GraphPresentation>;

enum class StandardGraph { kFreeN, kAbelianN, kCoxeterK2, kPathN };

inline std::string default_vertex_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i + 1);
}

// Edgeless graph on n infinite-order vertices, complete graph on n
// infinite-order vertices, K2 with both orders 2, path on n infinite-order
// vertices — respectively. Throws ValidationError for n = 0.
inline GraphPresentation standard_graph(StandardGraph kind, std::size_t n) {
  if (n == 0) throw ValidationError("standard graph needs n >= 1");
  if (kind == StandardGraph::kCoxeterK2) n = 2;
  std::vector<VertexSpec> vs;
  vs.reserve(n);
  const VertexOrder order = kind == StandardGraph::kCoxeterK2
                                ? VertexOrder::kTwo
                                : VertexOrder::kInfinite;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back({default_vertex_name(i), order});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  switch (kind) {
    case StandardGraph::kFreeN:
      break;
    case StandardGraph::kAbelianN:
    case StandardGraph::kCoxeterK2:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          edges.emplace_back(vs[i].name, vs[j].name);
        }
      }
      break;
    case StandardGraph::kPathN:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(vs[i].name, vs[i + 1].name);
      }
      break;
  }
  return GraphPresentation::validate(std::move(vs), edges);
}

inline GraphPtr make_standard_graph(StandardGraph kind, std::size_t n) {
  return std::make_shared<const GraphPresentation>(standard_graph(kind, n));
}

}  // namespace pcgroup
