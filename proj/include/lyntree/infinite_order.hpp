#pragma once

#include <cstddef>
#include <optional>

#include "lyntree/word.hpp"

namespace lyntree {

enum class Outcome { Less, Equal, Greater };

Outcome reverse(Outcome o) noexcept;
const char* to_string(Outcome o) noexcept;

// Result of comparing u^ω with v^ω.
struct OmegaComparison {
  Outcome outcome = Outcome::Equal;
  // 1-based index of the first differing letter; set iff outcome != Equal.
  std::optional<std::size_t> mismatch_position;
  // Common primitive root; set iff outcome == Equal.
  std::optional<Word> common_root;
};

// The six equivalent conditions on (u, v):
//   c1: u^ω < v^ω         c2: (uv)^ω < v^ω     c3: u^ω < (vu)^ω
//   c4: (uv)^ω < (vu)^ω   c5: u^ω < (uv)^ω     c6: (vu)^ω < v^ω
struct SixConditions {
  bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false, c6 = false;

  bool all_equal() const noexcept {
    return c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6;
  }
  bool any() const noexcept { return c1 || c2 || c3 || c4 || c5 || c6; }
};

// Compares u^ω and v^ω by comparing uv with vu. Throws EmptyWord,
// AlphabetMismatch.
OmegaComparison omega_cmp(const Word& u, const Word& v);

// Only the outcome, without computing position or root.
Outcome omega_outcome(const Word& u, const Word& v);

// Upper bound |u| + |v| - gcd(|u|, |v|) on any mismatch position.
std::size_t fine_wilf_bound(std::size_t u_len, std::size_t v_len) noexcept;

// First 1-based position where u^ω and v^ω differ, absent when they agree.
std::optional<std::size_t> omega_mismatch_position(const Word& u, const Word& v);

// True iff u^ω and v^ω already differ within the first |v| letters.
// Throws OmegaEqual when u^ω == v^ω.
bool comparison_within_first_factor(const Word& u, const Word& v);

SixConditions six_conditions(const Word& u, const Word& v);

// u^ω < (uv)^ω < (vu)^ω < v^ω. Throws PreconditionFailed unless u^ω < v^ω.
bool bergman_chain(const Word& u, const Word& v);

}  // namespace lyntree
