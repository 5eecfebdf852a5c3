#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcgroup/word.hpp"

namespace pcgroup {

// The pair (h, f) with g = h f h^-1, f cyclically reduced and
// lg(g) = lg(f) + 2 lg(h).
struct CyclicDecomposition {
  NormalForm conjugator;  // h
  NormalForm core;        // f
};

namespace detail {

inline NormalForm conjugate(const NormalForm& t, const NormalForm& x) {
  return multiply(multiply(invert(t), x), t);
}

}  // namespace detail

// True iff no single-letter conjugation shortens x: for every letter t in
// V u V^-1, lg(t^-1 x t) >= lg(x).
inline bool is_cyclically_reduced(const NormalForm& x) {
  for (const auto& t : generator_letters(x.graph())) {
    if (detail::conjugate(t, x).length() < x.length()) return false;
  }
  return true;
}

// Deterministic: repeatedly strips the ShortLex-least letter whose
// conjugation shortens the element.
inline CyclicDecomposition cyclic_decompose(const NormalForm& g) {
  const auto letters = generator_letters(g.graph());
  NormalForm h = identity(g.graph());
  NormalForm f = g;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (const auto& t : letters) {
      NormalForm candidate = detail::conjugate(t, f);
      if (candidate.length() < f.length()) {
        f = std::move(candidate);
        h = multiply(h, t);
        stripped = true;
        break;
      }
    }
  }
  return CyclicDecomposition{std::move(h), std::move(f)};
}

// Normal form of x^k by repeated squaring. x^0 = e; negative k is the power
// of the inverse (an extension beyond the k > 0 the length laws cover).
inline NormalForm power(const NormalForm& x, std::int64_t k) {
  if (k == 0) return identity(x.graph());
  NormalForm base = k < 0 ? invert(x) : x;
  std::uint64_t left = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                             : static_cast<std::uint64_t>(k);
  NormalForm acc = identity(x.graph());
  while (left > 0) {
    if (left & 1) acc = multiply(acc, base);
    left >>= 1;
    if (left > 0) base = multiply(base, base);
  }
  return acc;
}

// k * lg(f) + 2 * lg(h) from the cyclic decomposition, without computing the
// power. Equals lg(power(x, k)) on torsion-free presentations; torsion
// presentations are rejected because the law fails there.
inline std::uint64_t power_length(const NormalForm& x, std::int64_t k) {
  if (k < 1) throw ValidationError("power_length needs k >= 1");
  if (!x.graph()->torsion_free()) {
    throw ValidationError("power_length requires a torsion-free presentation");
  }
  const auto d = cyclic_decompose(x);
  return static_cast<std::uint64_t>(k) * d.core.length() +
         2 * d.conjugator.length();
}

// Every x with lg(x) <= max_lg and x^k = g, by enumeration; sorted by
// (lg, ShortLex). On torsion-free presentations max_lg = lg(g) is complete.
inline std::vector<NormalForm> roots(const NormalForm& g, std::int64_t k,
                                     std::uint64_t max_lg,
                                     std::uint64_t ceiling = kEnumerationCeiling) {
  if (k < 1) throw ValidationError("roots needs k >= 1");
  std::vector<NormalForm> found;
  for (const auto& x : enumerate_elements(g.graph(), max_lg, ceiling)) {
    if (power(x, k) == g) found.push_back(x);
  }
  return found;
}

// The unique x with x^k = g on a torsion-free presentation, if it exists.
// Route: decompose g = h f h^-1; a root must be h u h^-1 with u^k = f and
// lg(u) = lg(f)/k, so only that sphere is searched. Agrees with
// roots(g, k, lg(g)) by contract.
inline std::optional<NormalForm> unique_root(const NormalForm& g,
                                             std::int64_t k,
                                             std::uint64_t ceiling = kEnumerationCeiling) {
  if (k < 1) throw ValidationError("unique_root needs k >= 1");
  if (!g.graph()->torsion_free()) {
    throw ValidationError("unique_root requires a torsion-free presentation");
  }
  if (k == 1) return g;
  const auto d = cyclic_decompose(g);
  const std::uint64_t core_lg = d.core.length();
  if (core_lg % static_cast<std::uint64_t>(k) != 0) return std::nullopt;
  const std::uint64_t target = core_lg / static_cast<std::uint64_t>(k);
  for (const auto& u : enumerate_elements(g.graph(), target, ceiling)) {
    if (u.length() != target) continue;
    if (power(u, k) == d.core) {
      NormalForm x =
          multiply(multiply(d.conjugator, u), invert(d.conjugator));
      if (power(x, k) == g) return x;
    }
  }
  return std::nullopt;
}

}  // namespace pcgroup
