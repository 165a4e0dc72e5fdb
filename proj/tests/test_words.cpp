#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gcat/catalan.hpp"
#include "gcat/error.hpp"
#include "gcat/fixtures.hpp"
#include "gcat/words.hpp"
#include "oracles.hpp"

using namespace gcat;

namespace {

Word random_word(std::mt19937_64& rng, const Graph& g, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    const EdgeId e = rng() % g.num_edges();
    w.push_back(rng() % 2 ? Symbol::star(e) : Symbol::plain(e));
  }
  return w;
}

// Random word biased toward nonzero products: each symbol is chosen among
// those that keep the running normal form nonzero when possible.
Word random_live_word(std::mt19937_64& rng, const Graph& g, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Symbol> live;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (Symbol x : {Symbol::star(e), Symbol::plain(e)}) {
        Word trial = w;
        trial.push_back(x);
        if (!reduce(trial, g).is_zero()) live.push_back(x);
      }
    }
    if (live.empty()) break;
    w.push_back(live[rng() % live.size()]);
  }
  return w;
}

}  // namespace

TEST_CASE("reduction examples on G3") {
  const Graph g = golden_mean_graph();
  const auto w = [&](const char* text) { return parse_word(text, g); };
  CHECK(reduce(w("e2* e2"), g) == NormalForm::projection(2));
  CHECK(reduce(w("e3* e2* e2 e3"), g) == NormalForm::projection(1));
  // S_e1 S_e3 = 0 since t(e1) != s(e3)
  CHECK(reduce(w("e3* e1* e1 e3"), g).is_zero());
  CHECK(reduce(w("e1* e3"), g).is_zero());
  CHECK(reduce(Word{}, g) == NormalForm::identity());
  CHECK(reduce(w("e1 e2"), g) == NormalForm::term({0, 1}, 2, {}));
  CHECK(reduce(w("e2 e2"), g).is_zero());
  CHECK(reduce(w("e1 e3*"), g) == NormalForm::term({0}, 1, {2}));
}

TEST_CASE("membership tests") {
  const Graph g = golden_mean_graph();
  CHECK(is_catalan_word(parse_word("e1* e1", g), g) == 1);
  CHECK_FALSE(is_catalan_word(parse_word("e1 e1*", g), g));
  CHECK_FALSE(is_catalan_word(Word{}, g));
  CHECK_THROWS_AS(is_catalan_word(parse_word("e1*", g), g), Error);
}

TEST_CASE("state machine agrees with the rewriting oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_valid_graph(rng, 3, 5);
    for (int rep = 0; rep < 10; ++rep) {
      const Word w = random_live_word(rng, g, 2 * (1 + rng() % 4));
      if (!has_dyck_shape(w)) continue;
      const NormalForm nf = reduce(w, g);
      const int v = oracle::rewrite_to_projection(w, g);
      if (v > 0) {
        CHECK(nf == NormalForm::projection(v));
      } else if (v == 0) {
        CHECK(nf.is_zero());
      } else {
        CHECK_FALSE(nf.is_projection());
      }
    }
  }
}

TEST_CASE("reduce is multiplicative") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_valid_graph(rng, 3, 5);
    for (int rep = 0; rep < 10; ++rep) {
      const bool live = rep % 2 == 0;
      const Word a = live ? random_live_word(rng, g, rng() % 6) : random_word(rng, g, rng() % 6);
      const Word b = live ? random_live_word(rng, g, rng() % 6) : random_word(rng, g, rng() % 6);
      Word ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      CHECK(reduce(ab, g) == multiply(reduce(a, g), reduce(b, g), g));
    }
  }
}

TEST_CASE("normal-form product is associative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_valid_graph(rng, 3, 5);
    const NormalForm a = reduce(random_live_word(rng, g, rng() % 5), g);
    const NormalForm b = reduce(random_live_word(rng, g, rng() % 5), g);
    const NormalForm c = reduce(random_live_word(rng, g, rng() % 5), g);
    CHECK(multiply(multiply(a, b, g), c, g) == multiply(a, multiply(b, c, g), g));
  }
}

TEST_CASE("enumeration of B_n on G3") {
  const Graph g = golden_mean_graph();
  const auto b1 = enumerate_words(g, 1);
  REQUIRE(b1.size() == 3);
  std::set<std::string> text;
  for (const auto& w : b1) text.insert(format_word(w, g));
  CHECK(text == std::set<std::string>{"e1* e1", "e2* e2", "e3* e3"});
  CHECK(enumerate_words(g, 1, 1).size() == 2);
  CHECK(format_word(enumerate_words(g, 1, 2).front(), g) == "e2* e2");
  CHECK(enumerate_words(g, 2).size() == 10);
  CHECK(enumerate_words(g, 0).size() == 2);
  CHECK(enumerate_words(g, 0, 2) == std::vector<Word>{Word{}});
}

TEST_CASE("enumeration equals brute-force filtering") {
  std::vector<Graph> graphs{golden_mean_graph(), single_vertex_loops(2), complete_graph(2)};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) graphs.push_back(random_irreducible(seed));
  for (const Graph& g : graphs) {
    for (int n = 1; n <= 3; ++n) {
      const auto brute = oracle::brute_force_catalan_words(g, n);
      for (VertexId v = 1; v <= g.num_vertices(); ++v) {
        auto listed = enumerate_words(g, n, v);
        for (const auto& w : listed) {
          CHECK(is_catalan_word(w, g) == v);
          CHECK(reduce(w, g) == NormalForm::projection(v));
        }
        std::sort(listed.begin(), listed.end());
        std::vector<Word> expected;
        if (auto it = brute.find(v); it != brute.end()) expected = it->second;
        std::sort(expected.begin(), expected.end());
        CHECK(listed == expected);
      }
    }
  }
}

TEST_CASE("colored Catalan counts on loop graphs") {
  for (int n_loops = 1; n_loops <= 3; ++n_loops) {
    const Graph g = single_vertex_loops(n_loops);
    for (int n = 1; n <= 4; ++n) {
      mpz_class expected = oracle::catalan_by_recurrence(n)[n];
      for (int k = 0; k < n; ++k) expected *= n_loops;
      CHECK(enumerate_words(g, n).size() == expected);
    }
  }
}

TEST_CASE("word text round-trip and guards") {
  const Graph g = golden_mean_graph();
  for (const auto& w : enumerate_words(g, 3)) CHECK(parse_word(format_word(w, g), g) == w);
  CHECK_THROWS_AS(parse_word("e9", g), Error);
  EnumerationLimits tight;
  tight.max_objects = 5;
  CHECK_THROWS_AS(enumerate_words(g, 3, std::nullopt, tight), Error);
  CHECK_THROWS_AS(enumerate_words(g, 7), Error);
}
