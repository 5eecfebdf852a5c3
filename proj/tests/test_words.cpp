#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcgroup/corpus.hpp"
#include "pcgroup/oracle.hpp"
#include "pcgroup/word.hpp"

using namespace pcgroup;

namespace {

NormalForm nf(const std::string& text, const GraphPtr& g) {
  return normalize(parse_word(text, g));
}

}  // namespace

TEST_CASE("parse_word tokenizes syllables") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  Word w = parse_word("a b^-1", free2);
  REQUIRE(w.syllables().size() == 2);
  CHECK(w.syllables()[0] == Syllable{0, 1});
  CHECK(w.syllables()[1] == Syllable{1, -1});
  CHECK(w.str() == "a b^-1");

  CHECK(parse_word("", free2).syllables().empty());
  CHECK(parse_word("   ", free2).syllables().empty());
  CHECK(parse_word("a^3", free2).syllables()[0] == Syllable{0, 3});
}

TEST_CASE("parse_word reports the offending token") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  CHECK_THROWS_WITH_AS(parse_word("a^0", free2),
                       doctest::Contains("zero exponent"), ParseError);
  CHECK_THROWS_WITH_AS(parse_word("a q", free2),
                       doctest::Contains("unknown vertex 'q' at token 1"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_word("a^x", free2),
                       doctest::Contains("malformed exponent"), ParseError);
  CHECK_THROWS_AS(parse_word("a^", free2), ParseError);
  try {
    parse_word("a b^0", free2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("order-2 exponents are reduced modulo 2 at parse time") {
  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  CHECK(parse_word("a^-3", cox).syllables()[0] == Syllable{0, 1});
  CHECK(parse_word("a^4", cox).syllables().empty());
  CHECK_THROWS_AS(parse_word("a^0", cox), ParseError);
}

TEST_CASE("normalize: free cancellation and ShortLex sorting") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto ab2 = make_standard_graph(StandardGraph::kAbelianN, 2);

  NormalForm e = nf("a a^-1", free2);
  CHECK(e.is_identity());
  CHECK(e.length() == 0);
  CHECK(e.str() == "");

  NormalForm sorted = nf("b a", ab2);
  CHECK(sorted.str() == "a b");
  CHECK(sorted.length() == 2);

  CHECK(nf("b a", free2).str() == "b a");
}

TEST_CASE("normalize: commute-then-cancel across the path graph") {
  auto path3 = make_standard_graph(StandardGraph::kPathN, 3);
  // a and c do not commute, b commutes with both.
  NormalForm x = nf("a c a^-1 b", path3);
  CHECK(x.str() == "a b c a^-1");
  CHECK(x.length() == 4);

  CHECK(nf("b c b^-1", path3).str() == "c");
  CHECK(nf("a c a^-1", path3).length() == 3);
}

TEST_CASE("normalize agrees with the rewriting oracle on short words") {
  for (const auto& entry : builtin_corpus()) {
    oracle::RewritingOracle orc(entry.graph);
    for (std::size_t len = 0; len <= 4; ++len) {
      for (const auto& lw : oracle::all_letter_words(*entry.graph, len)) {
        Word w(entry.graph, oracle::to_letter_syllables(*entry.graph, lw));
        NormalForm got = normalize(w);
        oracle::LetterWord canon = orc.canonical(lw);
        REQUIRE_MESSAGE(
            got.syllables() == oracle::to_syllables(*entry.graph, canon),
            entry.name << ": '" << w.str() << "' -> '" << got.str() << "'");
        REQUIRE(got.length() == canon.size());
      }
    }
  }
}

TEST_CASE("normalize is idempotent on random words") {
  for (const auto& entry : builtin_corpus()) {
    if (entry.graph->vertex_count() == 0) continue;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Word w = random_word(entry.graph, 1 + seed % 12, seed);
      NormalForm once = normalize(w);
      NormalForm twice = normalize(Word(entry.graph, once.syllables()));
      CHECK(once == twice);
      CHECK(once.length() <= w.letter_count());
    }
  }
}

TEST_CASE("multiply: identity, inverses, concatenation") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  NormalForm a = nf("a", free2);
  NormalForm ab = nf("a b", free2);

  CHECK(multiply(a, invert(a)).is_identity());
  CHECK(multiply(identity(free2), ab) == ab);
  CHECK(multiply(ab, ab).str() == "a b a b");
  CHECK(multiply(ab, ab).length() == 4);

  auto ab2 = make_standard_graph(StandardGraph::kAbelianN, 2);
  CHECK_THROWS_WITH_AS(multiply(ab, nf("a", ab2)),
                       doctest::Contains("graph mismatch"), ValidationError);
}

TEST_CASE("invert reverses and negates; involutions are self-inverse") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  CHECK(invert(nf("a b", free2)).str() == "b^-1 a^-1");
  CHECK(invert(identity(free2)).is_identity());

  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  CHECK(invert(nf("a b", cox)) == nf("a b", cox));
}

TEST_CASE("length: identity, Coxeter pair, powers of one generator") {
  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  auto free1 = make_standard_graph(StandardGraph::kFreeN, 1);
  CHECK(identity(cox).length() == 0);
  CHECK(nf("a b", cox).length() == 2);
  CHECK(nf("a^3", free1).length() == 3);
}

TEST_CASE("equal solves the word problem on small graphs") {
  auto ab2 = make_standard_graph(StandardGraph::kAbelianN, 2);
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);

  CHECK(equal(parse_word("a b", ab2), parse_word("b a", ab2)));
  CHECK_FALSE(equal(parse_word("a b", free2), parse_word("b a", free2)));
  // a and b commute and a is an involution, so a b a = b.
  CHECK(equal(parse_word("a b a", cox), parse_word("b", cox)));
}

TEST_CASE("enumerate_elements: balls of small radius") {
  auto free1 = make_standard_graph(StandardGraph::kFreeN, 1);
  auto ball1 = enumerate_elements(free1, 2);
  REQUIRE(ball1.size() == 5);
  CHECK(ball1[0].str() == "");
  CHECK(ball1[1].str() == "a");
  CHECK(ball1[2].str() == "a^-1");
  CHECK(ball1[3].str() == "a^2");
  CHECK(ball1[4].str() == "a^-2");

  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  auto ballc = enumerate_elements(cox, 2);
  REQUIRE(ballc.size() == 4);
  CHECK(ballc[0].str() == "");
  CHECK(ballc[1].str() == "a");
  CHECK(ballc[2].str() == "b");
  CHECK(ballc[3].str() == "a b");

  auto path3 = make_standard_graph(StandardGraph::kPathN, 3);
  CHECK(enumerate_elements(path3, 2).size() == 29);

  CHECK_THROWS_WITH_AS(enumerate_elements(free1, 9),
                       doctest::Contains("ceiling"), ValidationError);
}

TEST_CASE("enumerate_elements is sorted by (lg, ShortLex) and deduplicated") {
  for (const auto& entry : builtin_corpus()) {
    auto ball = enumerate_elements(entry.graph, 3);
    for (std::size_t i = 0; i + 1 < ball.size(); ++i) {
      CHECK(shortlex_compare(ball[i], ball[i + 1]) < 0);
    }
    for (const auto& x : ball) {
      CHECK((x.length() == 0) == x.is_identity());
      CHECK(x.length() <= 3);
    }
  }
}

TEST_CASE("group laws over enumerated pairs") {
  for (const auto& entry : builtin_corpus()) {
    auto ball = enumerate_elements(entry.graph, 3);
    for (const auto& x : ball) {
      CHECK(invert(x).length() == x.length());
      CHECK(multiply(x, invert(x)).is_identity());
      CHECK(multiply(multiply(x, x), invert(x)) == x);
      for (const auto& y : ball) {
        CHECK(multiply(x, y).length() <= x.length() + y.length());
      }
    }
  }
}

TEST_CASE("lg equals Cayley graph distance from the identity") {
  for (const auto& entry : builtin_corpus()) {
    auto dist = oracle::cayley_distances(entry.graph, 4);
    for (const auto& [x, d] : dist) {
      CHECK_MESSAGE(x.length() == d,
                    entry.name << ": '" << x.str() << "' lg=" << x.length()
                               << " bfs=" << d);
    }
  }
}

TEST_CASE("random_word is deterministic and respects orders") {
  auto free2 = make_standard_graph(StandardGraph::kFreeN, 2);
  CHECK(random_word(free2, 0, 123).syllables().empty());

  Word w1 = random_word(free2, 3, 7);
  Word w2 = random_word(free2, 3, 7);
  CHECK(w1.syllables() == w2.syllables());
  CHECK(w1.letter_count() == 3);

  auto cox = make_standard_graph(StandardGraph::kCoxeterK2, 2);
  Word wc = random_word(cox, 5, 1);
  REQUIRE(wc.syllables().size() == 5);
  for (const auto& s : wc.syllables()) CHECK(s.exponent == 1);
}

TEST_CASE("word text round-trips") {
  auto path3 = make_standard_graph(StandardGraph::kPathN, 3);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    NormalForm x = normalize(random_word(path3, 8, seed));
    Word back = parse_word(x.str(), path3);
    CHECK(back.syllables() == x.syllables());
  }
}
