#pragma once

#include <optional>
#include <vector>

#include "lyntree/infinite_order.hpp"
#include "lyntree/word.hpp"

namespace lyntree {

// The three classical formulations; all are quantified over every
// nontrivial split w = uv.
enum class LyndonCondition {
  SplitLess,       // u < v
  WordLessSuffix,  // uv < v
  WordLessSwap,    // uv < vu
};

// Both infinite-order suffix formulations, over every nontrivial split w = uv.
enum class SuffixOmegaCondition {
  PrefixVsSuffix,  // u^ω < v^ω
  WordVsSuffix,    // w^ω < v^ω
};

// Both infinite-order characterizations of the first Lyndon factor, as the
// shortest nontrivial prefix p of w = ps satisfying:
enum class FirstFactorRule {
  PrefixVsWord,       // p^ω >= w^ω
  PrefixVsRemainder,  // s empty or p^ω >= s^ω
};

// Definition via u < v for every nontrivial split. Throws EmptyWord.
bool is_lyndon(const Word& w);
bool is_lyndon(const Word& w, LyndonCondition condition);

// First nontrivial split (1-based cut, |u|) violating u < v; absent for
// Lyndon words and single letters.
std::optional<std::size_t> first_non_lyndon_split(const Word& w);

// w^ω < v^ω for every nontrivial split; also evaluates u^ω < v^ω and throws
// InternalError if the two disagree.
bool is_lyndon_suffix_omega(const Word& w);
bool is_lyndon_suffix_omega(const Word& w, SuffixOmegaCondition condition);

// p^ω < w^ω for every nontrivial proper prefix p.
bool is_lyndon_prefix_omega(const Word& w);

// Factors l_1 >= l_2 >= ... >= l_n, each Lyndon, concatenating to the input.
struct LyndonFactorization {
  std::vector<Word> factors;

  Word concatenation() const;
};

// Duval's linear-time factorization. Throws EmptyWord.
LyndonFactorization lyndon_factorization(const Word& w);

// Shortest nontrivial suffix s whose s^ω is minimal. Independent of Duval.
Word last_lyndon_factor(const Word& w);

// Shortest nontrivial prefix satisfying `rule`. Independent of Duval.
Word first_lyndon_factor(const Word& w, FirstFactorRule rule = FirstFactorRule::PrefixVsWord);

// Lyndon words of length <= max_len in shortlex order, generated by Duval's
// successor rule one length at a time. Single consumer.
class LyndonEnumerator {
 public:
  LyndonEnumerator(AlphabetPtr alphabet, std::size_t max_len);

  // Next word, or nullopt when exhausted.
  std::optional<Word> next();

 private:
  bool advance();

  AlphabetPtr alphabet_;
  std::size_t max_len_;
  std::size_t target_len_ = 1;
  std::vector<Symbol> current_;
  bool started_ = false;
};

std::vector<Word> enumerate_lyndon_words(const AlphabetPtr& alphabet, std::size_t max_len);

}  // namespace lyntree
