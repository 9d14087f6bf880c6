#include <doctest.h>

#include "lyntree/lyndon.hpp"
#include "lyntree/oracle.hpp"
#include "test_util.hpp"

using namespace lyntree;
using lyntree::testing::W;
using lyntree::testing::ab;
using lyntree::testing::abc;
using lyntree::testing::strs;

TEST_CASE("is_lyndon examples") {
  CHECK(is_lyndon(W("aabab")));
  CHECK_FALSE(is_lyndon(W("aa")));
  CHECK(is_lyndon(W("aabaacab")));
  CHECK(is_lyndon(W("b")));
  CHECK_FALSE(is_lyndon(W("ba")));
  CHECK_THROWS_AS(is_lyndon(W("")), Error);
  CHECK(first_non_lyndon_split(W("ba")) == 1u);
  CHECK_FALSE(first_non_lyndon_split(W("aab")));
}

TEST_CASE("suffix and prefix characterizations, examples") {
  CHECK_FALSE(is_lyndon_suffix_omega(W("ababaab")));
  CHECK(is_lyndon_suffix_omega(W("aab")));
  CHECK(is_lyndon_suffix_omega(W("b")));

  CHECK(is_lyndon_prefix_omega(W("aabab")));
  CHECK_FALSE(is_lyndon_prefix_omega(W("ba")));
  CHECK(is_lyndon_prefix_omega(W("a")));

  // a^ω = (aa)^ω < (aaba)^ω < (aab)^ω < (aabab)^ω
  CHECK(omega_outcome(W("a"), W("aa")) == Outcome::Equal);
  CHECK(omega_outcome(W("aa"), W("aaba")) == Outcome::Less);
  CHECK(omega_outcome(W("aaba"), W("aab")) == Outcome::Less);
  CHECK(omega_outcome(W("aab"), W("aabab")) == Outcome::Less);
}

TEST_CASE("all Lyndon characterizations agree") {
  auto check_all = [](const AlphabetPtr& alphabet, std::size_t max_len) {
    for (const auto& w : oracle::all_words(alphabet, max_len)) {
      const bool ref = is_lyndon(w);
      CHECK(is_lyndon(w, LyndonCondition::WordLessSuffix) == ref);
      CHECK(is_lyndon(w, LyndonCondition::WordLessSwap) == ref);
      CHECK(is_lyndon_suffix_omega(w) == ref);
      CHECK(is_lyndon_prefix_omega(w) == ref);
    }
  };
  check_all(ab(), 14);
  check_all(abc(), 9);
}

TEST_CASE("lyndon_factorization examples") {
  CHECK(strs(lyndon_factorization(W("ababaab")).factors) ==
        std::vector<std::string>{"ab", "ab", "aab"});
  CHECK(strs(lyndon_factorization(W("aabaacab")).factors) == std::vector<std::string>{"aabaacab"});
  CHECK(strs(lyndon_factorization(W("bbb")).factors) == std::vector<std::string>{"b", "b", "b"});
  CHECK(strs(lyndon_factorization(W("cba")).factors) == std::vector<std::string>{"c", "b", "a"});
  CHECK_THROWS_AS(lyndon_factorization(W("")), Error);
}

TEST_CASE("factorization invariants over binary words up to 12") {
  for (const auto& w : oracle::all_words(ab(), 12)) {
    auto f = lyndon_factorization(w);
    CHECK(f.concatenation() == w);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(is_lyndon(f.factors[i]));
      if (i > 0) {
        CHECK(lex_cmp(f.factors[i - 1], f.factors[i]) >= 0);
        CHECK(omega_outcome(f.factors[i - 1], f.factors[i]) != Outcome::Less);
      }
    }
    if (f.factors.size() >= 2) {
      Word tail = f.factors[1];
      for (std::size_t i = 2; i < f.factors.size(); ++i) tail = tail + f.factors[i];
      CHECK(omega_outcome(f.factors.front(), tail) != Outcome::Less);
    }
    CHECK(first_lyndon_factor(w) == f.factors.front());
    CHECK(first_lyndon_factor(w, FirstFactorRule::PrefixVsRemainder) == f.factors.front());
    CHECK(last_lyndon_factor(w) == f.factors.back());
  }
}

TEST_CASE("first and last factor examples") {
  CHECK(last_lyndon_factor(W("ababaab")).str() == "aab");
  CHECK(last_lyndon_factor(W("aabab")).str() == "aabab");
  CHECK(last_lyndon_factor(W("ba")).str() == "a");
  CHECK(first_lyndon_factor(W("ababaab")).str() == "ab");
  CHECK(first_lyndon_factor(W("aabab")).str() == "aabab");
  CHECK(first_lyndon_factor(W("ba")).str() == "b");
  CHECK(first_lyndon_factor(W("ba"), FirstFactorRule::PrefixVsRemainder).str() == "b");
  CHECK_THROWS_AS(first_lyndon_factor(W("")), Error);
  CHECK_THROWS_AS(last_lyndon_factor(W("")), Error);

  // (ab)^ω > w^ω > (abaab)^ω while a^ω < w^ω < (babaab)^ω
  const Word w = W("ababaab");
  CHECK(omega_outcome(W("ab"), w) == Outcome::Greater);
  CHECK(omega_outcome(w, W("abaab")) == Outcome::Greater);
  CHECK(omega_outcome(W("a"), w) == Outcome::Less);
  CHECK(omega_outcome(w, W("babaab")) == Outcome::Less);
}

TEST_CASE("lexicographic and infinite order agree on Lyndon pairs") {
  auto words = enumerate_lyndon_words(ab(), 8);
  for (const auto& u : words) {
    for (const auto& v : words) {
      CHECK((lex_cmp(u, v) < 0) == (omega_outcome(u, v) == Outcome::Less));
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(strs(enumerate_lyndon_words(ab(), 3)) ==
        std::vector<std::string>{"a", "b", "ab", "aab", "abb"});
  std::size_t five = 0;
  for (const auto& w : enumerate_lyndon_words(ab(), 5)) five += w.size() == 5;
  CHECK(five == 6);
  CHECK(strs(enumerate_lyndon_words(make_alphabet("a"), 4)) == std::vector<std::string>{"a"});

  LyndonEnumerator gen(ab(), 2);
  CHECK(gen.next()->str() == "a");
  CHECK(gen.next()->str() == "b");
  CHECK(gen.next()->str() == "ab");
  CHECK_FALSE(gen.next());
  CHECK_FALSE(gen.next());
}

TEST_CASE("enumeration matches the brute-force filter, shortlex, no duplicates") {
  for (auto alphabet : {ab(), abc()}) {
    const std::size_t max_len = alphabet->size() == 2 ? 12 : 7;
    auto fast = enumerate_lyndon_words(alphabet, max_len);
    auto slow = oracle::lyndon_words_by_filter(alphabet, max_len);
    CHECK(strs(fast) == strs(slow));
    for (std::size_t i = 1; i < fast.size(); ++i) {
      const bool shortlex = fast[i - 1].size() < fast[i].size() ||
                            (fast[i - 1].size() == fast[i].size() && lex_cmp(fast[i - 1], fast[i]) < 0);
      CHECK(shortlex);
    }
  }
}

TEST_CASE("Lyndon words are unbordered") {
  for (const auto& w : enumerate_lyndon_words(ab(), 12)) {
    if (w.size() >= 2) CHECK(borders(w).empty());
  }
}
