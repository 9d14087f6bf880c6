#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lyntree/oracle.hpp"

namespace lyntree {

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct SweepFailure {
  std::size_t index = 0;  // position of the word in shortlex order
  std::string word;
  std::string check;
  std::string detail;

  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

// Aggregate of verify_word over every word up to a length. Tallies follow
// oracle::check_names(); lyndon_per_length[i] counts Lyndon words of
// length i + 1. The first failure is the shortlex-smallest one.
struct SweepSummary {
  std::vector<CheckTally> tallies;
  std::vector<std::size_t> lyndon_per_length;
  std::size_t words_visited = 0;
  std::optional<SweepFailure> first_failure;

  bool passed() const noexcept { return !first_failure.has_value(); }
  std::size_t lyndon_total() const noexcept;

  // Order-independent merge; keeps the failure with the smaller index.
  void merge(const SweepSummary& other);

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

// Reference implementation, one word after another.
SweepSummary sweep_serial(const AlphabetPtr& alphabet, std::size_t max_len);

// OpenMP over words. jobs == 0 uses the runtime default. The result is
// identical to sweep_serial for any thread count.
SweepSummary sweep_parallel(const AlphabetPtr& alphabet, std::size_t max_len, int jobs);

}  // namespace lyntree
