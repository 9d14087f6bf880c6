#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lyntree/error.hpp"

namespace lyntree {

// Rank of a symbol inside its alphabet. All comparisons happen on ranks.
using Symbol = std::uint8_t;

// A finite set of printable characters with an explicit total order: the
// order of the declaring string. "abc" means a < b < c, "cba" the opposite.
class OrderedAlphabet {
 public:
  static constexpr std::size_t kMaxSymbols = 256;

  // Throws DuplicateSymbol if a character repeats, EmptyWord if empty.
  explicit OrderedAlphabet(std::string_view symbols);

  // Distinct characters of `text` in increasing character order.
  static OrderedAlphabet natural(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(Symbol rank) const { return symbols_.at(rank); }
  std::optional<Symbol> rank(char c) const noexcept;

  // Same symbols in reverse order.
  OrderedAlphabet reversed() const;

  bool operator==(const OrderedAlphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, kMaxSymbols> rank_{};
};

using AlphabetPtr = std::shared_ptr<const OrderedAlphabet>;

AlphabetPtr make_alphabet(std::string_view symbols);

// A finite word over an ordered alphabet, stored as symbol ranks.
class Word {
 public:
  Word() = default;
  Word(AlphabetPtr alphabet, std::vector<Symbol> letters);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> letters() const noexcept { return letters_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }

  Word prefix(std::size_t length) const;
  Word suffix_from(std::size_t start) const;
  Word factor(std::size_t start, std::size_t length) const;

  // Repeats this word `count` times.
  Word power(std::size_t count) const;

  std::string str() const;

  friend Word operator+(const Word& lhs, const Word& rhs);

  // Structural equality: same alphabet, same letters.
  friend bool operator==(const Word& lhs, const Word& rhs);

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> letters_;
};

bool same_alphabet(const Word& u, const Word& v) noexcept;

// Throws AlphabetMismatch unless u and v share an alphabet.
void require_same_alphabet(const Word& u, const Word& v);

// Throws EmptyWord naming `what`.
void require_nonempty(const Word& w, std::string_view what = "word");

// r = k + num/den with 0 <= num/den < 1, num/den reduced.
struct FractionalExponent {
  std::size_t k = 0;
  std::size_t num = 0;
  std::size_t den = 1;

  bool strict() const noexcept { return k >= 1; }
  double value() const noexcept {
    return static_cast<double>(k) + static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const FractionalExponent&, const FractionalExponent&) = default;
};

// Maps characters to alphabet ranks; throws UnknownSymbolError.
Word make_word(std::string_view text, const AlphabetPtr& alphabet);

// Lexicographic order on finite words; a proper prefix is smaller.
std::strong_ordering lex_cmp(const Word& u, const Word& v);

// Nontrivial proper prefixes that are also suffixes, by increasing length.
std::vector<Word> borders(const Word& w);

// Periods p with 0 < p < |w|, ascending.
std::vector<std::size_t> nontrivial_periods(const Word& w);

// The exponent r with v = u^r, if v is a prefix of the periodic extension of u.
std::optional<FractionalExponent> fractional_power_of(const Word& v, const Word& u);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

PrimitiveRoot primitive_root(const Word& w);

}  // namespace lyntree
