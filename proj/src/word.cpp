#include "lyntree/word.hpp"

#include <algorithm>
#include <numeric>

namespace lyntree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::EmptyBase: return "EmptyBase";
    case ErrorKind::OmegaEqual: return "OmegaEqual";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotLyndon: return "NotLyndon";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::BadAddress: return "BadAddress";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::UniquenessViolation: return "UniquenessViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

UnknownSymbolError::UnknownSymbolError(std::size_t position, char symbol)
    : Error(ErrorKind::UnknownSymbol, "unknown symbol '" + std::string(1, symbol) +
                                          "' at position " + std::to_string(position)),
      position_(position),
      symbol_(symbol) {}

OrderedAlphabet::OrderedAlphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) {
    throw Error(ErrorKind::EmptyWord, "alphabet must contain at least one symbol");
  }
  rank_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto slot = static_cast<unsigned char>(symbols_[i]);
    if (rank_[slot] >= 0) {
      throw Error(ErrorKind::DuplicateSymbol,
                  "duplicate alphabet symbol '" + std::string(1, symbols_[i]) + "'");
    }
    rank_[slot] = static_cast<std::int16_t>(i);
  }
}

OrderedAlphabet OrderedAlphabet::natural(std::string_view text) {
  std::string symbols(text);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return OrderedAlphabet(symbols);
}

std::optional<Symbol> OrderedAlphabet::rank(char c) const noexcept {
  auto r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) return std::nullopt;
  return static_cast<Symbol>(r);
}

OrderedAlphabet OrderedAlphabet::reversed() const {
  return OrderedAlphabet(std::string(symbols_.rbegin(), symbols_.rend()));
}

AlphabetPtr make_alphabet(std::string_view symbols) {
  return std::make_shared<const OrderedAlphabet>(symbols);
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Symbol s : letters_) {
    if (!alphabet_ || s >= alphabet_->size()) {
      throw Error(ErrorKind::UnknownSymbol, "letter rank out of alphabet range");
    }
  }
}

Word Word::prefix(std::size_t length) const {
  return factor(0, length);
}

Word Word::suffix_from(std::size_t start) const {
  return factor(start, size() - std::min(start, size()));
}

Word Word::factor(std::size_t start, std::size_t length) const {
  start = std::min(start, size());
  length = std::min(length, size() - start);
  Word out;
  out.alphabet_ = alphabet_;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                      letters_.begin() + static_cast<std::ptrdiff_t>(start + length));
  return out;
}

Word Word::power(std::size_t count) const {
  Word out;
  out.alphabet_ = alphabet_;
  out.letters_.reserve(size() * count);
  for (std::size_t i = 0; i < count; ++i) {
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
  }
  return out;
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : letters_) out.push_back(alphabet_->symbol(s));
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  require_same_alphabet(lhs, rhs);
  Word out;
  out.alphabet_ = lhs.alphabet_ ? lhs.alphabet_ : rhs.alphabet_;
  out.letters_.reserve(lhs.size() + rhs.size());
  out.letters_.insert(out.letters_.end(), lhs.letters_.begin(), lhs.letters_.end());
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

bool operator==(const Word& lhs, const Word& rhs) {
  return lhs.letters_ == rhs.letters_ && same_alphabet(lhs, rhs);
}

bool same_alphabet(const Word& u, const Word& v) noexcept {
  const auto& a = u.alphabet();
  const auto& b = v.alphabet();
  if (a == b) return true;
  // A default-constructed word has no alphabet and is compatible with any.
  if (!a || !b) return true;
  return *a == *b;
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (!same_alphabet(u, v)) {
    throw Error(ErrorKind::AlphabetMismatch,
                "words '" + u.str() + "' and '" + v.str() + "' use different alphabets");
  }
}

void require_nonempty(const Word& w, std::string_view what) {
  if (w.empty()) {
    throw Error(ErrorKind::EmptyWord, std::string(what) + " must be nonempty");
  }
}

Word make_word(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<Symbol> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto r = alphabet->rank(text[i]);
    if (!r) throw UnknownSymbolError(i + 1, text[i]);
    letters.push_back(*r);
  }
  return Word(alphabet, std::move(letters));
}

std::strong_ordering lex_cmp(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  auto a = u.letters();
  auto b = v.letters();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Classic failure function: fail[i] is the length of the longest border of
// the prefix of length i + 1.
std::vector<std::size_t> failure_function(std::span<const Symbol> w) {
  std::vector<std::size_t> fail(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

std::vector<std::size_t> border_lengths(const Word& w) {
  auto fail = failure_function(w.letters());
  std::vector<std::size_t> lengths;
  for (std::size_t b = fail.back(); b > 0; b = fail[b - 1]) lengths.push_back(b);
  std::reverse(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

std::vector<Word> borders(const Word& w) {
  require_nonempty(w);
  std::vector<Word> out;
  for (std::size_t len : border_lengths(w)) out.push_back(w.prefix(len));
  return out;
}

std::vector<std::size_t> nontrivial_periods(const Word& w) {
  require_nonempty(w);
  auto lengths = border_lengths(w);
  std::vector<std::size_t> periods;
  periods.reserve(lengths.size());
  for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
    periods.push_back(w.size() - *it);
  }
  return periods;
}

std::optional<FractionalExponent> fractional_power_of(const Word& v, const Word& u) {
  if (u.empty()) throw Error(ErrorKind::EmptyBase, "fractional power base must be nonempty");
  require_same_alphabet(u, v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != u[i % u.size()]) return std::nullopt;
  }
  FractionalExponent r;
  r.k = v.size() / u.size();
  std::size_t rem = v.size() % u.size();
  if (rem == 0) return r;
  std::size_t g = std::gcd(rem, u.size());
  r.num = rem / g;
  r.den = u.size() / g;
  return r;
}

PrimitiveRoot primitive_root(const Word& w) {
  require_nonempty(w);
  // The smallest period p dividing |w| gives the root, else w is primitive.
  auto fail = failure_function(w.letters());
  std::size_t p = w.size() - fail.back();
  if (w.size() % p != 0) p = w.size();
  return {w.prefix(p), w.size() / p};
}

}  // namespace lyntree
