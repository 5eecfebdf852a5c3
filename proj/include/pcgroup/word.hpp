#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pcgroup/error.hpp"
#include "pcgroup/presentation.hpp"

namespace pcgroup {

// One maximal run v^k of a single generator. For an order-2 vertex the
// exponent is always 1 (v^-1 = v, v^2 = e).
struct Syllable {
  std::uint32_t vertex = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

namespace detail {

inline std::int64_t reduce_exponent(const GraphPresentation& g,
                                    std::uint32_t v, std::int64_t e) {
  if (g.vertex(v).order == VertexOrder::kTwo) e = ((e % 2) + 2) % 2;
  return e;
}

// Pushes v^e onto an already reduced syllable sequence: the new syllable
// merges with the last same-vertex syllable it can reach through commuting
// syllables, cancels it on exponent zero, or is appended. Keeps the sequence
// reduced (no merge or cancellation is enabled by any shuffle).
inline void push_syllable(const GraphPresentation& g,
                          std::vector<Syllable>& out, std::uint32_t v,
                          std::int64_t e) {
  e = reduce_exponent(g, v, e);
  if (e == 0) return;
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i].vertex == v) {
      std::int64_t merged = reduce_exponent(g, v, out[i].exponent + e);
      if (merged == 0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        out[i].exponent = merged;
      }
      return;
    }
    if (!g.commutes(out[i].vertex, v)) break;
  }
  out.push_back(Syllable{v, e});
}

// Lexicographically least linearization of the dependence order on a reduced
// syllable sequence. Syllables depend on each other iff their vertices
// coincide or do not commute; among the ready syllables the least vertex is
// emitted first (two ready syllables always have distinct vertices, so this
// is the unique ShortLex-least geodesic spelling).
inline std::vector<Syllable> shortlex_linearize(
    const GraphPresentation& g, const std::vector<Syllable>& in) {
  const std::size_t n = in.size();
  if (n < 2) return in;
  const std::size_t nv = g.vertex_count();

  std::vector<std::vector<std::uint32_t>> conflicts(nv);
  for (std::uint32_t u = 0; u < nv; ++u) {
    for (std::uint32_t w = 0; w < nv; ++w) {
      if (u == w || !g.commutes(u, w)) conflicts[u].push_back(w);
    }
  }

  std::vector<std::vector<std::size_t>> pos(nv);
  for (std::size_t i = 0; i < n; ++i) pos[in[i].vertex].push_back(i);
  std::vector<std::size_t> head(nv, 0);

  // indeg[j] = number of conflicting vertices with an occurrence before j;
  // each such vertex contributes exactly its last occurrence as a direct
  // predecessor (earlier ones follow by same-vertex chaining).
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last_seen(nv, kNone);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t w : conflicts[in[j].vertex]) {
      if (last_seen[w] != kNone) ++indeg[j];
    }
    last_seen[in[j].vertex] = j;
  }

  std::set<std::pair<std::uint32_t, std::size_t>> ready;
  for (std::size_t j = 0; j < n; ++j) {
    if (indeg[j] == 0) ready.emplace(in[j].vertex, j);
  }

  std::vector<Syllable> result;
  result.reserve(n);
  while (!ready.empty()) {
    auto [u, j] = *ready.begin();
    ready.erase(ready.begin());
    result.push_back(in[j]);
    ++head[u];
    const std::size_t next_u = head[u] < pos[u].size() ? pos[u][head[u]] : n;
    for (std::uint32_t w : conflicts[u]) {
      if (w == u) {
        if (next_u < n && --indeg[next_u] == 0) ready.emplace(u, next_u);
        continue;
      }
      const auto& pw = pos[w];
      auto it = std::upper_bound(pw.begin(), pw.end(), j);
      for (; it != pw.end() && *it < next_u; ++it) {
        if (--indeg[*it] == 0) ready.emplace(w, *it);
      }
    }
  }
  return result;
}

inline std::vector<Syllable> reduce_and_linearize(
    const GraphPresentation& g, const std::vector<Syllable>& raw) {
  std::vector<Syllable> reduced;
  reduced.reserve(raw.size());
  for (const auto& s : raw) push_syllable(g, reduced, s.vertex, s.exponent);
  return shortlex_linearize(g, reduced);
}

inline std::uint64_t weight(const std::vector<Syllable>& syllables) {
  std::uint64_t total = 0;
  for (const auto& s : syllables) {
    total += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent
                                                       : s.exponent);
  }
  return total;
}

inline void require_same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a == b || (a && b && *a == *b)) return;
  throw ValidationError("graph mismatch between operands");
}

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace detail

// A raw, possibly unreduced syllable word over a presentation.
class Word {
 public:
  Word(GraphPtr graph, std::vector<Syllable> syllables)
      : graph_(std::move(graph)) {
    if (!graph_) throw ValidationError("word needs a presentation");
    syllables_.reserve(syllables.size());
    for (auto& s : syllables) {
      if (s.vertex >= graph_->vertex_count()) {
        throw ValidationError("syllable vertex out of range");
      }
      if (s.exponent == 0) throw ValidationError("zero exponent syllable");
      std::int64_t e = detail::reduce_exponent(*graph_, s.vertex, s.exponent);
      if (e == 0) continue;  // even power of an involution
      syllables_.push_back(Syllable{s.vertex, e});
    }
  }

  static Word empty(GraphPtr graph) { return Word(std::move(graph), {}); }

  const GraphPtr& graph() const noexcept { return graph_; }
  const std::vector<Syllable>& syllables() const noexcept {
    return syllables_;
  }
  std::uint64_t letter_count() const { return detail::weight(syllables_); }

  std::string str() const;

 private:
  GraphPtr graph_;
  std::vector<Syllable> syllables_;
};

// The canonical geodesic representative of a group element: fully reduced,
// ShortLex-least among all equivalent geodesic spellings, with the geodesic
// length lg cached. Obtained through normalize() and the group operations;
// immutable.
class NormalForm {
 public:
  const GraphPtr& graph() const noexcept { return graph_; }
  const std::vector<Syllable>& syllables() const noexcept {
    return syllables_;
  }

  // lg: minimal number of generators from V u V^-1 whose product is this
  // element.
  std::uint64_t length() const noexcept { return length_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  std::string str() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.syllables_ == b.syllables_ &&
           (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
  }

 private:
  friend NormalForm normalize(const Word& w);
  friend NormalForm multiply(const NormalForm&, const NormalForm&);
  friend NormalForm invert(const NormalForm&);
  friend NormalForm identity(const GraphPtr&);

  NormalForm(GraphPtr graph, std::vector<Syllable> canonical)
      : graph_(std::move(graph)),
        syllables_(std::move(canonical)),
        length_(detail::weight(syllables_)) {}

  GraphPtr graph_;
  std::vector<Syllable> syllables_;
  std::uint64_t length_;
};

// Unique canonical representative of the word's group element.
inline NormalForm normalize(const Word& w) {
  return NormalForm(w.graph(),
                    detail::reduce_and_linearize(*w.graph(), w.syllables()));
}

inline NormalForm identity(const GraphPtr& graph) {
  if (!graph) throw ValidationError("identity needs a presentation");
  return NormalForm(graph, {});
}

// Normal form of the concatenation. lg(xy) <= lg(x) + lg(y).
inline NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  detail::require_same_graph(x.graph(), y.graph());
  std::vector<Syllable> concat;
  concat.reserve(x.syllables().size() + y.syllables().size());
  concat.insert(concat.end(), x.syllables().begin(), x.syllables().end());
  concat.insert(concat.end(), y.syllables().begin(), y.syllables().end());
  return NormalForm(x.graph(),
                    detail::reduce_and_linearize(*x.graph(), concat));
}

// Normal form of x^-1. lg(x^-1) = lg(x).
inline NormalForm invert(const NormalForm& x) {
  std::vector<Syllable> rev(x.syllables().rbegin(), x.syllables().rend());
  for (auto& s : rev) {
    if (x.graph()->vertex(s.vertex).order == VertexOrder::kInfinite) {
      s.exponent = -s.exponent;
    }
  }
  return NormalForm(x.graph(), detail::reduce_and_linearize(*x.graph(), rev));
}

inline std::uint64_t length(const NormalForm& x) { return x.length(); }

inline bool equal(const Word& x, const Word& y) {
  detail::require_same_graph(x.graph(), y.graph());
  return normalize(x) == normalize(y);
}

// Letter order: by vertex position, then positive exponent before negative.
// Words compare first by lg, then letter-lexicographically; the comparison
// walks syllables expanding the letter runs lazily.
inline int shortlex_compare(const NormalForm& a, const NormalForm& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  const auto& sa = a.syllables();
  const auto& sb = b.syllables();
  std::size_t ia = 0, ib = 0;
  std::uint64_t ra = 0, rb = 0;  // letters left in the current syllable
  while (true) {
    if (ra == 0) {
      if (ia == sa.size()) return ib == sb.size() && rb == 0 ? 0 : -1;
      ra = static_cast<std::uint64_t>(std::llabs(sa[ia].exponent));
    }
    if (rb == 0) {
      if (ib == sb.size()) return 1;
      rb = static_cast<std::uint64_t>(std::llabs(sb[ib].exponent));
    }
    if (sa[ia].vertex != sb[ib].vertex) {
      return sa[ia].vertex < sb[ib].vertex ? -1 : 1;
    }
    const bool nega = sa[ia].exponent < 0, negb = sb[ib].exponent < 0;
    if (nega != negb) return nega ? 1 : -1;
    const std::uint64_t step = std::min(ra, rb);
    ra -= step;
    rb -= step;
    if (ra == 0) ++ia;
    if (rb == 0) ++ib;
  }
}

inline bool shortlex_less(const NormalForm& a, const NormalForm& b) {
  return shortlex_compare(a, b) < 0;
}

struct NormalFormHash {
  std::size_t operator()(const NormalForm& x) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ull;
    };
    for (const auto& s : x.syllables()) {
      mix(s.vertex);
      mix(static_cast<std::uint64_t>(s.exponent));
    }
    return static_cast<std::size_t>(h);
  }
};

// The single-letter normal forms v^1 (and v^-1 for infinite-order vertices),
// in ShortLex letter order.
inline std::vector<NormalForm> generator_letters(const GraphPtr& graph) {
  std::vector<NormalForm> letters;
  for (std::uint32_t v = 0; v < graph->vertex_count(); ++v) {
    letters.push_back(normalize(Word(graph, {Syllable{v, 1}})));
    if (graph->vertex(v).order == VertexOrder::kInfinite) {
      letters.push_back(normalize(Word(graph, {Syllable{v, -1}})));
    }
  }
  return letters;
}

inline constexpr std::uint64_t kEnumerationCeiling = 8;

// All distinct group elements with lg <= max_lg, sorted by (lg, ShortLex).
// Breadth-first generator multiplication with canonical-form deduplication.
inline std::vector<NormalForm> enumerate_elements(
    const GraphPtr& graph, std::uint64_t max_lg,
    std::uint64_t ceiling = kEnumerationCeiling) {
  if (max_lg > ceiling) {
    throw ValidationError("enumeration ceiling exceeded: " +
                          std::to_string(max_lg) + " > " +
                          std::to_string(ceiling));
  }
  const auto letters = generator_letters(graph);
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::vector<NormalForm> result;
  std::vector<NormalForm> frontier{identity(graph)};
  seen.insert(frontier.front());
  result.push_back(frontier.front());
  for (std::uint64_t depth = 1; depth <= max_lg && !frontier.empty();
       ++depth) {
    std::vector<NormalForm> next;
    for (const auto& x : frontier) {
      for (const auto& t : letters) {
        NormalForm y = multiply(x, t);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end(), shortlex_less);
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return result;
}

// Deterministic pseudorandom word of exactly letter_count single-letter
// syllables. Pure function of (graph, letter_count, seed).
inline Word random_word(const GraphPtr& graph, std::size_t letter_count,
                        std::uint64_t seed) {
  if (letter_count > 0 && graph->vertex_count() == 0) {
    throw ValidationError("random word over the empty presentation");
  }
  detail::SplitMix64 rng{seed};
  std::vector<Syllable> syllables;
  syllables.reserve(letter_count);
  for (std::size_t i = 0; i < letter_count; ++i) {
    const auto v = static_cast<std::uint32_t>(rng.next() % graph->vertex_count());
    std::int64_t e = 1;
    if (graph->vertex(v).order == VertexOrder::kInfinite && (rng.next() & 1)) {
      e = -1;
    }
    syllables.push_back(Syllable{v, e});
  }
  return Word(graph, std::move(syllables));
}

// --- word text syntax -------------------------------------------------------
//
// Whitespace-separated tokens `v`, `v^k`, `v^-k`; the empty string is the
// identity.

inline Word parse_word(std::string_view text, const GraphPtr& graph) {
  if (!graph) throw ValidationError("word needs a presentation");
  std::vector<Syllable> syllables;
  std::size_t token_index = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);

    std::string_view name = token;
    std::int64_t exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view exp = token.substr(caret + 1);
      bool neg = false;
      if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) {
        neg = exp[0] == '-';
        exp.remove_prefix(1);
      }
      if (exp.empty() ||
          !std::all_of(exp.begin(), exp.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed exponent in token '" + std::string(token) +
                             "' at token " + std::to_string(token_index),
                         token_index);
      }
      exponent = 0;
      for (char c : exp) {
        exponent = exponent * 10 + (c - '0');
        if (exponent > (1ll << 40)) {
          throw ParseError("exponent out of range in token '" +
                               std::string(token) + "' at token " +
                               std::to_string(token_index),
                           token_index);
        }
      }
      if (neg) exponent = -exponent;
      if (exponent == 0) {
        throw ParseError("zero exponent in token '" + std::string(token) +
                             "' at token " + std::to_string(token_index),
                         token_index);
      }
    }
    auto vi = graph->find(name);
    if (!is_identifier(name) || !vi) {
      throw ParseError("unknown vertex '" + std::string(name) +
                           "' at token " + std::to_string(token_index),
                       token_index);
    }
    std::int64_t e =
        detail::reduce_exponent(*graph, static_cast<std::uint32_t>(*vi),
                                exponent);
    if (e != 0) {
      syllables.push_back(Syllable{static_cast<std::uint32_t>(*vi), e});
    }
    ++token_index;
  }
  return Word(graph, std::move(syllables));
}

namespace detail {

inline std::string syllables_to_text(const GraphPresentation& g,
                                     const std::vector<Syllable>& syllables) {
  std::string out;
  for (const auto& s : syllables) {
    if (!out.empty()) out += ' ';
    out += g.vertex(s.vertex).name;
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

}  // namespace detail

inline std::string Word::str() const {
  return detail::syllables_to_text(*graph_, syllables_);
}

inline std::string NormalForm::str() const {
  return detail::syllables_to_text(*graph_, syllables_);
}

}  // namespace pcgroup
