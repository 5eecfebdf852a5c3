#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pcgroup/word.hpp"

// Brute-force references used by the test and acceptance suites. Everything
// here works on plain letter sequences and explores the rewriting moves one
// by one; none of it calls the stack-based reduction in word.hpp, so the two
// routes stay independent.

namespace pcgroup::oracle {

// A letter is one generator or inverse generator, encoded as
// vertex * 2 + (1 if inverted). Involutions only use the uninverted code.
// The byte encoding makes std::string comparison agree with the letter
// order (vertex position first, positive before negative).
using LetterWord = std::string;

inline char encode_letter(std::uint32_t vertex, bool inverse) {
  return static_cast<char>(static_cast<unsigned char>(vertex * 2 + (inverse ? 1 : 0)));
}

inline LetterWord to_letters(const GraphPresentation& g,
                             const std::vector<Syllable>& syllables) {
  LetterWord out;
  for (const auto& s : syllables) {
    const bool inv = s.exponent < 0 &&
                     g.vertex(s.vertex).order == VertexOrder::kInfinite;
    const auto count = static_cast<std::uint64_t>(
        s.exponent < 0 ? -s.exponent : s.exponent);
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(encode_letter(s.vertex, inv));
    }
  }
  return out;
}

inline std::vector<Syllable> to_syllables(const GraphPresentation& g,
                                          const LetterWord& letters) {
  std::vector<Syllable> out;
  for (char c : letters) {
    const auto code = static_cast<std::uint32_t>(static_cast<unsigned char>(c));
    const std::uint32_t v = code / 2;
    std::int64_t e = (code & 1) ? -1 : 1;
    if (g.vertex(v).order == VertexOrder::kTwo) e = 1;
    if (!out.empty() && out.back().vertex == v &&
        (out.back().exponent < 0) == (e < 0)) {
      out.back().exponent += e;
    } else {
      out.push_back(Syllable{v, e});
    }
  }
  return out;
}

// One single-letter syllable per letter; the raw shape normalize() receives
// when sweeping the word universe.
inline std::vector<Syllable> to_letter_syllables(const GraphPresentation& g,
                                                 const LetterWord& letters) {
  std::vector<Syllable> out;
  out.reserve(letters.size());
  for (char c : letters) {
    const auto code = static_cast<std::uint32_t>(static_cast<unsigned char>(c));
    const std::uint32_t v = code / 2;
    std::int64_t e = (code & 1) ? -1 : 1;
    if (g.vertex(v).order == VertexOrder::kTwo) e = 1;
    out.push_back(Syllable{v, e});
  }
  return out;
}

// Exhaustive closure of a word under the rewriting moves: swap of adjacent
// commuting letters and cancellation of adjacent inverse pairs (for an
// involution, of an adjacent equal pair). The canonical form of the class is
// the shortest, letter-lexicographically least word reached. Results are
// cached per class, so sweeping every word of a fixed length over one graph
// costs roughly one traversal of the whole word universe.
class RewritingOracle {
 public:
  explicit RewritingOracle(GraphPtr graph) : graph_(std::move(graph)) {}

  const GraphPtr& graph() const noexcept { return graph_; }

  LetterWord canonical(const LetterWord& start) {
    if (auto it = cache_.find(start); it != cache_.end()) return it->second;

    const GraphPresentation& g = *graph_;
    std::unordered_set<LetterWord> visited{start};
    std::deque<LetterWord> queue{start};
    LetterWord best = start;
    bool resolved = false;
    LetterWord canon;

    auto consider = [&](LetterWord&& next) {
      if (!visited.insert(next).second) return;
      if (auto it = cache_.find(next); it != cache_.end() && !resolved) {
        resolved = true;
        canon = it->second;
      }
      queue.push_back(std::move(next));
    };

    while (!queue.empty() && !resolved) {
      LetterWord w = std::move(queue.front());
      queue.pop_front();
      if (w.size() < best.size() || (w.size() == best.size() && w < best)) {
        best = w;
      }
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const auto a = static_cast<std::uint32_t>(static_cast<unsigned char>(w[i]));
        const auto b = static_cast<std::uint32_t>(static_cast<unsigned char>(w[i + 1]));
        const std::uint32_t va = a / 2, vb = b / 2;
        if (va == vb) {
          const bool order2 = g.vertex(va).order == VertexOrder::kTwo;
          const bool cancels = order2 ? a == b : a != b;
          if (cancels) {
            LetterWord next = w;
            next.erase(i, 2);
            consider(std::move(next));
          }
        } else if (g.commutes(va, vb)) {
          LetterWord next = w;
          std::swap(next[i], next[i + 1]);
          consider(std::move(next));
        }
      }
    }
    if (!resolved) canon = best;
    for (const auto& w : visited) cache_.emplace(w, canon);
    return canon;
  }

  LetterWord canonical_of_word(const Word& w) {
    return canonical(to_letters(*graph_, w.syllables()));
  }

  std::size_t cached_states() const noexcept { return cache_.size(); }

 private:
  GraphPtr graph_;
  std::unordered_map<LetterWord, LetterWord> cache_;
};

// Every letter word of length exactly `len` over V u V^-1 (involutions
// contribute a single letter).
inline std::vector<LetterWord> all_letter_words(const GraphPresentation& g,
                                                std::size_t len) {
  std::vector<char> alphabet;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    alphabet.push_back(encode_letter(v, false));
    if (g.vertex(v).order == VertexOrder::kInfinite) {
      alphabet.push_back(encode_letter(v, true));
    }
  }
  std::vector<LetterWord> words{LetterWord()};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<LetterWord> next;
    next.reserve(words.size() * alphabet.size());
    for (const auto& w : words) {
      for (char c : alphabet) {
        LetterWord n = w;
        n.push_back(c);
        next.push_back(std::move(n));
      }
    }
    words = std::move(next);
  }
  return words;
}

// Breadth-first distances from the identity in the Cayley graph over
// V u V^-1, to the given radius. Cross-checks lg against graph distance.
inline std::unordered_map<NormalForm, std::uint64_t, NormalFormHash>
cayley_distances(const GraphPtr& graph, std::uint64_t radius) {
  const auto letters = generator_letters(graph);
  std::unordered_map<NormalForm, std::uint64_t, NormalFormHash> dist;
  std::vector<NormalForm> frontier{identity(graph)};
  dist.emplace(frontier.front(), 0);
  for (std::uint64_t d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<NormalForm> next;
    for (const auto& x : frontier) {
      for (const auto& t : letters) {
        NormalForm y = multiply(x, t);
        if (dist.emplace(y, d).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

// Least core length over every conjugation h^-1 g h with lg(h) <= lg(g)/2;
// exhaustive counterpart of the greedy single-letter stripping.
inline std::uint64_t min_core_length(const NormalForm& g,
                                     std::uint64_t ceiling = kEnumerationCeiling) {
  std::uint64_t best = g.length();
  for (const auto& h : enumerate_elements(g.graph(), g.length() / 2, ceiling)) {
    const NormalForm core = multiply(multiply(invert(h), g), h);
    if (core.length() < best) best = core.length();
  }
  return best;
}

}  // namespace pcgroup::oracle
