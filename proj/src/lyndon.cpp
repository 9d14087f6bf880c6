#include "lyntree/lyndon.hpp"

#include <algorithm>

namespace lyntree {

namespace {

using Letters = std::span<const Symbol>;

bool lex_less(Letters a, Letters b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool split_holds(const Word& w, std::size_t cut, LyndonCondition condition) {
  Letters all = w.letters();
  Letters u = all.first(cut);
  Letters v = all.subspan(cut);
  switch (condition) {
    case LyndonCondition::SplitLess:
      return lex_less(u, v);
    case LyndonCondition::WordLessSuffix:
      return lex_less(all, v);
    case LyndonCondition::WordLessSwap: {
      std::vector<Symbol> vu(v.begin(), v.end());
      vu.insert(vu.end(), u.begin(), u.end());
      return lex_less(all, vu);
    }
  }
  return false;
}

}  // namespace

bool is_lyndon(const Word& w) {
  return is_lyndon(w, LyndonCondition::SplitLess);
}

bool is_lyndon(const Word& w, LyndonCondition condition) {
  require_nonempty(w);
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    if (!split_holds(w, cut, condition)) return false;
  }
  return true;
}

std::optional<std::size_t> first_non_lyndon_split(const Word& w) {
  require_nonempty(w);
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    if (!split_holds(w, cut, LyndonCondition::SplitLess)) return cut;
  }
  return std::nullopt;
}

bool is_lyndon_suffix_omega(const Word& w, SuffixOmegaCondition condition) {
  require_nonempty(w);
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    const Word v = w.suffix_from(cut);
    const Word& left = condition == SuffixOmegaCondition::PrefixVsSuffix ? w.prefix(cut) : w;
    if (omega_outcome(left, v) != Outcome::Less) return false;
  }
  return true;
}

bool is_lyndon_suffix_omega(const Word& w) {
  bool by_word = is_lyndon_suffix_omega(w, SuffixOmegaCondition::WordVsSuffix);
  bool by_prefix = is_lyndon_suffix_omega(w, SuffixOmegaCondition::PrefixVsSuffix);
  if (by_word != by_prefix) {
    throw Error(ErrorKind::InternalError,
                "suffix omega characterizations disagree on '" + w.str() + "'");
  }
  return by_word;
}

bool is_lyndon_prefix_omega(const Word& w) {
  require_nonempty(w);
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (omega_outcome(w.prefix(len), w) != Outcome::Less) return false;
  }
  return true;
}

Word LyndonFactorization::concatenation() const {
  Word out;
  for (const auto& f : factors) out = out + f;
  return out;
}

LyndonFactorization lyndon_factorization(const Word& w) {
  require_nonempty(w);
  LyndonFactorization result;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      result.factors.push_back(w.factor(i, j - k));
      i += j - k;
    }
  }
  return result;
}

Word last_lyndon_factor(const Word& w) {
  require_nonempty(w);
  // Shortest first, replacing only on strict improvement, keeps the shortest
  // among ties.
  std::size_t best = w.size() - 1;
  for (std::size_t start = w.size() - 1; start-- > 0;) {
    if (omega_outcome(w.suffix_from(start), w.suffix_from(best)) == Outcome::Less) best = start;
  }
  return w.suffix_from(best);
}

Word first_lyndon_factor(const Word& w, FirstFactorRule rule) {
  require_nonempty(w);
  for (std::size_t len = 1; len < w.size(); ++len) {
    const Word p = w.prefix(len);
    const Word& other = rule == FirstFactorRule::PrefixVsWord ? w : w.suffix_from(len);
    if (omega_outcome(p, other) != Outcome::Less) return p;
  }
  return w;
}

LyndonEnumerator::LyndonEnumerator(AlphabetPtr alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {}

bool LyndonEnumerator::advance() {
  const auto top = static_cast<Symbol>(alphabet_->size() - 1);
  const std::size_t m = current_.size();
  for (std::size_t i = m; i < target_len_; ++i) current_.push_back(current_[i - m]);
  while (!current_.empty() && current_.back() == top) current_.pop_back();
  if (current_.empty()) return false;
  ++current_.back();
  return true;
}

std::optional<Word> LyndonEnumerator::next() {
  if (target_len_ > max_len_) return std::nullopt;
  while (true) {
    if (!started_) {
      started_ = true;
      current_.assign(1, 0);
    } else if (!advance()) {
      if (++target_len_ > max_len_) return std::nullopt;
      current_.assign(1, 0);
    }
    if (current_.size() == target_len_) return Word(alphabet_, current_);
  }
}

std::vector<Word> enumerate_lyndon_words(const AlphabetPtr& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  LyndonEnumerator gen(alphabet, max_len);
  while (auto w = gen.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace lyntree
