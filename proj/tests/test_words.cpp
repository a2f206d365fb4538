#include <algorithm>

#include "doctest.h"
#include "tropid/sampler.hpp"
#include "tropid/word_classes.hpp"

using namespace tropid;

namespace {

const Variable X('x');
const Variable Y('y');

Word W(const std::string& text) { return Word::parse(text); }

// random word over {x, y} with run exponents capped at max_exp
Word random_word(SplitMix64& rng, int len, int max_exp) {
  std::vector<Variable> letters;
  while (static_cast<int>(letters.size()) < len) {
    const Variable v = rng.below(2) ? Y : X;
    int run = 0;
    for (auto it = letters.rbegin(); it != letters.rend() && *it == v; ++it) ++run;
    if (run >= max_exp) continue;
    letters.push_back(v);
  }
  return Word::from_letters(letters);
}

}  // namespace

TEST_CASE("variables compare by identity") {
  CHECK(Variable('x') == Variable('x'));
  CHECK(Variable('x') != Variable('y'));
  CHECK(Variable('y', 1) != Variable('y', 2));
  CHECK(Variable('y', 1).name() == "y1");
  CHECK_THROWS_AS(Variable('X'), std::invalid_argument);
}

TEST_CASE("concatenation merges boundary runs") {
  CHECK(concat(Word(), W("xy")) == W("xy"));
  CHECK(concat(W("xy"), Word()) == W("xy"));
  CHECK(concat(W("x^2"), W("xy")) == W("x^3y"));
  CHECK(concat(W("x^2y^2"), W("yx")) == W("x^2y^3x"));
  CHECK(concat(W("x^2y^2"), W("yx")).length() == 6);
}

TEST_CASE("kappa counts occurrences") {
  CHECK(kappa(W("x^2y^2x"), X) == 3);
  CHECK(kappa(W("x^2y^2x"), Y) == 2);
  CHECK(kappa(Word(), X) == 0);
  CHECK(kappa(W("x^2y^2x"), Variable('z')) == 0);
}

TEST_CASE("exponent sets come from the canonical form") {
  CHECK(exponent_set(W("x^2y^2x")) == std::set<long>{1, 2});
  CHECK(exponent_set(W("x^3")) == std::set<long>{3});
  CHECK(exponent_set(W("xyxy^2x^2y")) == std::set<long>{1, 2});
  CHECK(exponent_set(Word()).empty());
}

TEST_CASE("k-uniformity") {
  CHECK(is_k_uniform(W("xyxy^2x^2y"), 4));
  for (long k = 1; k <= 5; ++k) CHECK_FALSE(is_k_uniform(W("x^2y^2x"), k));
  CHECK(is_k_uniform(W("xy"), 1));
}

TEST_CASE("factor queries flatten the word") {
  CHECK(is_factor(W("xy"), W("x^2y^2x")));
  CHECK(is_factor(W("yx"), W("x^2y^2x")));
  CHECK(is_factor(W("x^2"), W("x^2y^2x")));
  CHECK(is_factor(W("y^2"), W("x^2y^2x")));
  CHECK_FALSE(is_factor(W("x^2"), W("xyx")));
  CHECK(is_factor(W("xyx"), W("xyx")));
  CHECK_THROWS_AS(is_factor(Word(), W("xyx")), std::invalid_argument);
}

TEST_CASE("subword is the scattered-subsequence order") {
  CHECK(is_subword(W("x^2"), W("xyx")));
  CHECK(is_subword(W("xyx"), W("xyx")));
  CHECK_FALSE(is_subword(W("y^3"), W("xyxy")));
  CHECK(is_subword(Word(), W("xyxy")));
}

TEST_CASE("prefix and suffix runs") {
  CHECK(pre_run(W("x^2y^2x"), X) == 2);
  CHECK(suf_run(W("x^2y^2x"), X) == 1);
  CHECK(pre_run(W("x^2y^2x"), Y) == 0);
  CHECK(suf_run(W("x^2y^2x"), Y) == 0);
  CHECK(pre_run(Word(), X) == 0);
}

TEST_CASE("substitution is a homomorphism on runs") {
  const std::map<Variable, Word> refine{{X, W("y1y2")}, {Y, W("y2y1")}};
  CHECK(substitute(W("xy"), refine) == W("y1y2^2y1"));
  const std::map<Variable, Word> id_map{{X, W("x")}, {Y, W("y")}};
  CHECK(substitute(W("xyxy^2x^2y"), id_map) == W("xyxy^2x^2y"));
  const std::map<Variable, Word> check_vars{{X, W("ab")}};
  CHECK(substitute(W("x^2"), check_vars) == W("abab"));
  CHECK_THROWS_AS(substitute(W("xy"), check_vars), std::invalid_argument);
  CHECK(substitute(W("xy"), refine).length() == 4);
}

TEST_CASE("text grammar parses and prints canonically") {
  CHECK(W("x^2y^2x") == W("xxyyx"));
  CHECK(W(" x ^2 y^2x ") == W("xxyyx"));
  CHECK(W("x^2y^2x").str() == "x^2y^2x");
  CHECK(W("y1y2^2y1").str() == "y1y2^2y1");
  CHECK(Word().str() == "e");
  CHECK_THROWS_AS(W(""), std::invalid_argument);
  CHECK_THROWS_AS(W("X"), std::invalid_argument);
  CHECK_THROWS_AS(W("x^0"), std::invalid_argument);
  CHECK_THROWS_AS(W("2x"), std::invalid_argument);
  CHECK_THROWS_AS(W("x^"), std::invalid_argument);
}

TEST_CASE("canonical form is idempotent and round-trips") {
  SplitMix64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 1 + static_cast<int>(rng.below(12)), 3);
    CHECK(Word(w.runs()) == w);
    CHECK(Word::parse(w.str()) == w);
    CHECK(Word::from_letters(w.letters()) == w);
  }
}

TEST_CASE("length and kappa are additive under concat") {
  SplitMix64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 1 + static_cast<int>(rng.below(8)), 3);
    const Word v = random_word(rng, 1 + static_cast<int>(rng.below(8)), 3);
    const Word uv = concat(u, v);
    CHECK(uv.length() == u.length() + v.length());
    for (Variable x : {X, Y}) CHECK(kappa(uv, x) == kappa(u, x) + kappa(v, x));
  }
}

TEST_CASE("every factor is a subword") {
  SplitMix64 rng(33);
  int factor_hits = 0;
  for (int i = 0; i < 400; ++i) {
    const Word u = random_word(rng, 1 + static_cast<int>(rng.below(4)), 2);
    const Word w = random_word(rng, 1 + static_cast<int>(rng.below(10)), 2);
    if (is_factor(u, w)) {
      ++factor_hits;
      CHECK(is_subword(u, w));
    }
  }
  CHECK(factor_hits > 20);  // the sample actually exercised the implication
}

TEST_CASE("W_n enumeration lists exactly the expected members") {
  const std::vector<Word> w2 = enumerate_class(WordClassSpec::xy(2));
  CHECK(w2 == std::vector<Word>{W("x^2"), W("xy"), W("yx"), W("y^2")});
  const std::vector<Word> w3 = enumerate_class(WordClassSpec::xy(3));
  CHECK(w3 == std::vector<Word>{W("x^2y"), W("xyx"), W("xy^2"), W("yx^2"), W("yxy"),
                                W("y^2x")});
  CHECK(enumerate_class(WordClassSpec({X}, 2, 2)) == std::vector<Word>{W("x^2")});
}

TEST_CASE("class sizes follow the Fibonacci recurrence") {
  std::vector<std::size_t> sizes;
  for (int n = 2; n <= 15; ++n)
    sizes.push_back(enumerate_class(WordClassSpec::xy(n)).size());
  CHECK(sizes[0] == 4);
  CHECK(sizes[1] == 6);
  for (std::size_t i = 2; i < sizes.size(); ++i)
    CHECK(sizes[i] == sizes[i - 1] + sizes[i - 2]);
}

TEST_CASE("power-word predicate") {
  const WordClassSpec s2 = WordClassSpec::xy(2);
  const WordClassSpec s3 = WordClassSpec::xy(3);
  CHECK(is_power_word(W("x^2y^2x"), s2));
  CHECK(is_power_word(W("xyxy^2x^2y"), s3));
  CHECK_FALSE(is_power_word(W("x^2y^2"), s2));       // yx is not a factor
  CHECK_FALSE(is_power_word(W("x^3y^2xy^2x"), s2));  // run exceeds P
  CHECK_FALSE(is_power_word(W("x^2y^2xz"), s2));     // content escapes C
}

TEST_CASE("faithfulness is the stricter predicate") {
  const WordClassSpec s2 = WordClassSpec::xy(2);
  CHECK(is_faithful(W("x^2y^2x"), s2));
  // appending y keeps content and exponents intact
  CHECK(is_faithful(W("x^2y^2xy"), s2));
  // appending x merges the suffix run: the exponent set collapses to {2}
  CHECK(is_power_word(W("x^2y^2x^2"), s2));
  CHECK_FALSE(is_faithful(W("x^2y^2x^2"), s2));
  CHECK_THROWS_AS(is_faithful(W("x^2y^2"), s2), std::invalid_argument);
}

TEST_CASE("padding a power word preserves the factor cover") {
  SplitMix64 rng(34);
  const WordClassSpec s2 = WordClassSpec::xy(2);
  const WordClassSpec s3 = WordClassSpec::xy(3);
  const std::vector<std::pair<WordClassSpec, Word>> bases{
      {s2, W("x^2y^2x")}, {s3, W("xyxy^2x^2y")}};
  for (const auto& [spec, base] : bases) {
    const std::vector<Word> members = enumerate_class(spec);
    for (int i = 0; i < 100; ++i) {
      const Word w1 = random_word(rng, 1 + static_cast<int>(rng.below(4)), spec.max_exp);
      const Word w2 = random_word(rng, 1 + static_cast<int>(rng.below(4)), spec.max_exp);
      const Word padded = concat(w1, concat(base, w2));
      for (const Word& u : members) CHECK(is_factor(u, padded));
      // boundary merges can push a run past P; the full predicate needs them in range
      const bool runs_ok =
          std::all_of(padded.runs().begin(), padded.runs().end(),
                      [&](const Run& r) { return r.exp <= spec.max_exp; });
      if (runs_ok) CHECK(is_power_word(padded, spec));
    }
  }
}

TEST_CASE("word class specs validate their invariants") {
  CHECK_THROWS_AS(WordClassSpec({}, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(WordClassSpec({X, X}, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(WordClassSpec({X, Y}, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(WordClassSpec({X, Y}, 3, 2), std::invalid_argument);
}
