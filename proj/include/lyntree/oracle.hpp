#pragma once

#include <string>
#include <vector>

#include "lyntree/infinite_order.hpp"
#include "lyntree/lyndon.hpp"
#include "lyntree/lyndon_trees.hpp"
#include "lyntree/word.hpp"

// Brute-force reference routines. They share data types with the fast paths
// but none of their algorithms, so every cross-check compares two
// independently written computations.
namespace lyntree::oracle {

// Materializes both periodic extensions to |u| + |v| letters and compares.
OmegaComparison omega_cmp_naive(const Word& u, const Word& v);

// w strictly smaller than each of its proper nonempty suffixes.
bool is_lyndon_naive(const Word& w);

// Enumerates every factorization into Lyndon factors and keeps the
// nonincreasing ones. Throws UniquenessViolation unless exactly one remains.
LyndonFactorization lyndon_factorization_naive(const Word& w);

// Definitional recursion on the longest proper Lyndon prefix.
MagmaTree left_lyndon_tree_naive(const Word& w);

// Definitional recursion on the longest proper Lyndon suffix.
MagmaTree right_lyndon_tree_naive(const Word& w);

// Exponential filter over all words of length <= max_len.
std::vector<Word> lyndon_words_by_filter(const AlphabetPtr& alphabet, std::size_t max_len);

// All words of length 1..max_len in shortlex order.
std::vector<Word> all_words(const AlphabetPtr& alphabet, std::size_t max_len);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;  // counterexample when failed
};

struct VerificationReport {
  Word word;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  const CheckResult* first_failure() const noexcept;
};

// Names of every check verify_word runs, in report order.
const std::vector<std::string>& check_names();

// Runs every applicable check on w; tree checks are Skipped for non-Lyndon
// words. Throws EmptyWord.
VerificationReport verify_word(const Word& w);

}  // namespace lyntree::oracle
