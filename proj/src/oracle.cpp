#include "lyntree/oracle.hpp"

#include <algorithm>
#include <functional>

#include "lyntree/prefix_standardization.hpp"

namespace lyntree::oracle {

namespace {

using Letters = std::vector<Symbol>;

Letters letters_of(const Word& w) { return Letters(w.letters().begin(), w.letters().end()); }

Letters periodic(const Word& w, std::size_t length) {
  Letters out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = w[i % w.size()];
  return out;
}

Letters concat(const Word& a, const Word& b) {
  Letters out = letters_of(a);
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return out;
}

Word naive_root(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    if (periodic(w.prefix(d), w.size()) == letters_of(w)) return w.prefix(d);
  }
  return w;
}

bool naive_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                      b.letters().end());
}

}  // namespace

OmegaComparison omega_cmp_naive(const Word& u, const Word& v) {
  require_nonempty(u, "u");
  require_nonempty(v, "v");
  require_same_alphabet(u, v);
  OmegaComparison r;
  if (concat(u, v) == concat(v, u)) {
    r.outcome = Outcome::Equal;
    r.common_root = naive_root(u);
    return r;
  }
  const std::size_t length = u.size() + v.size();
  Letters a = periodic(u, length);
  Letters b = periodic(v, length);
  for (std::size_t i = 0; i < length; ++i) {
    if (a[i] != b[i]) {
      r.outcome = a[i] < b[i] ? Outcome::Less : Outcome::Greater;
      r.mismatch_position = i + 1;
      return r;
    }
  }
  throw Error(ErrorKind::InternalError, "non-commuting words with agreeing extensions: '" + u.str() +
                                            "', '" + v.str() + "'");
}

bool is_lyndon_naive(const Word& w) {
  require_nonempty(w);
  for (std::size_t start = 1; start < w.size(); ++start) {
    if (!naive_less(w, w.suffix_from(start))) return false;
  }
  return true;
}

namespace {

void collect_factorizations(const Word& w, std::size_t start, std::vector<Word>& current,
                            std::vector<std::vector<Word>>& out) {
  if (start == w.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t end = start + 1; end <= w.size(); ++end) {
    Word piece = w.factor(start, end - start);
    if (!is_lyndon_naive(piece)) continue;
    current.push_back(std::move(piece));
    collect_factorizations(w, end, current, out);
    current.pop_back();
  }
}

}  // namespace

LyndonFactorization lyndon_factorization_naive(const Word& w) {
  require_nonempty(w);
  std::vector<std::vector<Word>> all;
  std::vector<Word> current;
  collect_factorizations(w, 0, current, all);
  std::vector<std::vector<Word>> nonincreasing;
  for (auto& f : all) {
    bool ok = true;
    for (std::size_t i = 1; i < f.size() && ok; ++i) ok = !naive_less(f[i - 1], f[i]);
    if (ok) nonincreasing.push_back(std::move(f));
  }
  if (nonincreasing.size() != 1) {
    throw Error(ErrorKind::UniquenessViolation,
                "'" + w.str() + "' has " + std::to_string(nonincreasing.size()) +
                    " nonincreasing Lyndon factorizations");
  }
  return LyndonFactorization{std::move(nonincreasing.front())};
}

MagmaTree left_lyndon_tree_naive(const Word& w) {
  require_nonempty(w);
  if (!is_lyndon_naive(w)) throw Error(ErrorKind::NotLyndon, "'" + w.str() + "' is not a Lyndon word");
  if (w.size() == 1) return MagmaTree::leaf(w.alphabet(), w[0]);
  std::size_t cut = w.size() - 1;
  while (!is_lyndon_naive(w.prefix(cut))) --cut;
  return MagmaTree::node(left_lyndon_tree_naive(w.prefix(cut)),
                         left_lyndon_tree_naive(w.suffix_from(cut)));
}

MagmaTree right_lyndon_tree_naive(const Word& w) {
  require_nonempty(w);
  if (!is_lyndon_naive(w)) throw Error(ErrorKind::NotLyndon, "'" + w.str() + "' is not a Lyndon word");
  if (w.size() == 1) return MagmaTree::leaf(w.alphabet(), w[0]);
  std::size_t cut = 1;
  while (!is_lyndon_naive(w.suffix_from(cut))) ++cut;
  return MagmaTree::node(right_lyndon_tree_naive(w.prefix(cut)),
                         right_lyndon_tree_naive(w.suffix_from(cut)));
}

std::vector<Word> all_words(const AlphabetPtr& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  const auto k = alphabet->size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    Letters cur(len, 0);
    while (true) {
      out.emplace_back(alphabet, cur);
      std::size_t i = len;
      while (i > 0 && cur[i - 1] + 1u == k) cur[--i] = 0;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  return out;
}

std::vector<Word> lyndon_words_by_filter(const AlphabetPtr& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : all_words(alphabet, max_len)) {
    if (is_lyndon_naive(w)) out.push_back(std::move(w));
  }
  return out;
}

bool VerificationReport::passed() const noexcept { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return &c;
  }
  return nullptr;
}

namespace {

// A check body returns an empty string on success, a counterexample otherwise.
using CheckFn = std::function<std::string(const Word&)>;

struct CheckSpec {
  std::string name;
  bool lyndon_only;
  CheckFn run;
};

std::string q(const Word& w) { return "'" + w.str() + "'"; }

std::string pair_text(const Word& u, const Word& v) { return "(" + q(u) + ", " + q(v) + ")"; }

bool omega_less(const Word& a, const Word& b) { return omega_outcome(a, b) == Outcome::Less; }

Word concat_all(const std::vector<Word>& parts, std::size_t count, const AlphabetPtr& alphabet) {
  Word out(alphabet, {});
  for (std::size_t i = 0; i < count; ++i) out = out + parts[i];
  return out;
}

std::vector<Word> lss_foliages(const MagmaTree& t, const NodeAddress& x) {
  std::vector<Word> out;
  for (const auto& s : left_subtrees_sequence(t, x)) out.push_back(foliage(s));
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && w.prefix(p.size()) == p;
}

// Internal node addresses in in-order.
void in_order(const MagmaTree& t, const NodeAddress& at, std::vector<NodeAddress>& out) {
  if (t.is_leaf()) return;
  in_order(t.left(), at.child(Direction::Left), out);
  out.push_back(at);
  in_order(t.right(), at.child(Direction::Right), out);
}

std::string check_omega_agreement(const Word& w) {
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Word u = w.prefix(i);
      const Word v = w.suffix_from(j);
      auto fast = omega_cmp(u, v);
      auto slow = omega_cmp_naive(u, v);
      if (fast.outcome != slow.outcome || fast.mismatch_position != slow.mismatch_position ||
          !(fast.common_root == slow.common_root)) {
        return "omega_cmp and naive disagree on " + pair_text(u, v);
      }
      if (omega_mismatch_position(u, v) != slow.mismatch_position) {
        return "mismatch scan disagrees on " + pair_text(u, v);
      }
    }
  }
  return {};
}

std::string check_fine_wilf(const Word& w) {
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Word u = w.prefix(i);
      const Word v = w.suffix_from(j);
      auto k = omega_mismatch_position(u, v);
      if (k && *k > fine_wilf_bound(u.size(), v.size())) {
        return "position " + std::to_string(*k) + " exceeds bound for " + pair_text(u, v);
      }
      if (k) {
        bool within = comparison_within_first_factor(u, v);
        if (within != !fractional_power_of(v, u).has_value()) {
          return "first-factor criterion fails for " + pair_text(u, v);
        }
      }
    }
  }
  return {};
}

std::string check_definitions(const Word& w) {
  const bool ref = is_lyndon(w);
  if (is_lyndon(w, LyndonCondition::WordLessSuffix) != ref ||
      is_lyndon(w, LyndonCondition::WordLessSwap) != ref || is_lyndon_naive(w) != ref) {
    return "Lyndon conditions disagree on " + q(w);
  }
  return {};
}

std::string check_suffix_omega(const Word& w) {
  const bool ref = is_lyndon(w);
  if (is_lyndon_suffix_omega(w, SuffixOmegaCondition::PrefixVsSuffix) != ref ||
      is_lyndon_suffix_omega(w, SuffixOmegaCondition::WordVsSuffix) != ref) {
    return "suffix omega characterization disagrees on " + q(w);
  }
  return {};
}

std::string check_prefix_omega(const Word& w) {
  if (is_lyndon_prefix_omega(w) != is_lyndon(w)) {
    return "prefix omega characterization disagrees on " + q(w);
  }
  return {};
}

std::string check_six(const Word& w) {
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    const Word u = w.prefix(cut);
    const Word v = w.suffix_from(cut);
    auto c = six_conditions(u, v);
    const bool equal = omega_outcome(u, v) == Outcome::Equal;
    if (equal ? c.any() : !c.all_equal()) return "six conditions split on " + pair_text(u, v);
  }
  return {};
}

std::string check_bergman(const Word& w) {
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    Word u = w.prefix(cut);
    Word v = w.suffix_from(cut);
    auto o = omega_outcome(u, v);
    if (o == Outcome::Equal) continue;
    if (o == Outcome::Greater) std::swap(u, v);
    if (!bergman_chain(u, v)) return "chain broken for " + pair_text(u, v);
  }
  return {};
}

std::string check_factorization(const Word& w) {
  auto f = lyndon_factorization(w);
  if (!(f.concatenation() == w)) return "factors do not concatenate to " + q(w);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (!is_lyndon(f.factors[i])) return "factor " + q(f.factors[i]) + " is not Lyndon";
    if (i == 0) continue;
    if (lex_cmp(f.factors[i - 1], f.factors[i]) < 0) return "factors increase lexicographically";
    if (omega_less(f.factors[i - 1], f.factors[i])) return "factors increase in omega order";
  }
  return {};
}

std::string check_factorization_naive(const Word& w) {
  auto fast = lyndon_factorization(w).factors;
  auto slow = lyndon_factorization_naive(w).factors;
  if (fast != slow) return "Duval and naive factorizations differ on " + q(w);
  return {};
}

std::string check_first_factor(const Word& w) {
  const Word expected = lyndon_factorization(w).factors.front();
  if (!(first_lyndon_factor(w, FirstFactorRule::PrefixVsWord) == expected) ||
      !(first_lyndon_factor(w, FirstFactorRule::PrefixVsRemainder) == expected)) {
    return "first factor characterization fails on " + q(w);
  }
  return {};
}

std::string check_last_factor(const Word& w) {
  if (!(last_lyndon_factor(w) == lyndon_factorization(w).factors.back())) {
    return "last factor characterization fails on " + q(w);
  }
  return {};
}

std::string check_first_dominates(const Word& w) {
  auto f = lyndon_factorization(w).factors;
  if (f.size() < 2) return {};
  Word tail(w.alphabet(), {});
  for (std::size_t i = 1; i < f.size(); ++i) tail = tail + f[i];
  if (omega_less(f.front(), tail)) return "first factor below the tail on " + q(w);
  return {};
}

std::string check_lex_omega(const Word& w) {
  auto f = lyndon_factorization(w).factors;
  for (const auto& a : f) {
    for (const auto& b : f) {
      if ((lex_cmp(a, b) < 0) != omega_less(a, b)) return "orders disagree on " + pair_text(a, b);
    }
  }
  return {};
}

std::string check_unbordered(const Word& w) {
  if (w.size() >= 2 && !borders(w).empty()) return q(w) + " has a border";
  return {};
}

std::string check_standard_factorization(const Word& w) {
  const MagmaTree t = left_lyndon_tree(w);
  for (const auto& x : internal_nodes(t)) {
    const Word f = foliage(subtree_at(t, x));
    auto [u, v] = left_standard_factorization(f);
    if (!is_lyndon(u) || !is_lyndon(v) || lex_cmp(u, v) >= 0) {
      return "left factorization of " + q(f) + " is not an increasing Lyndon pair";
    }
    if (v.size() >= 2) {
      auto [v1, v2] = left_standard_factorization(v);
      if (lex_cmp(v1, u) > 0 || !is_prefix(v1, u)) {
        return "inner factor " + q(v1) + " is not a prefix of " + q(u);
      }
    }
  }
  return {};
}

std::string check_lss_chain(const Word& w) {
  const MagmaTree t = left_lyndon_tree(w);
  for (const auto& x : internal_nodes(t)) {
    auto ls = lss_foliages(t, x);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (!is_lyndon(ls[i])) return "lss word " + q(ls[i]) + " is not Lyndon";
      if (i > 0 && !is_prefix(ls[i], ls[i - 1])) {
        return "lss at " + x.str() + ": " + q(ls[i]) + " not a prefix of " + q(ls[i - 1]);
      }
    }
  }
  return {};
}

std::string check_lss_foliage(const Word& w) {
  const MagmaTree t = left_lyndon_tree(w);
  std::vector<NodeAddress> order;
  in_order(t, NodeAddress::root(), order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& x = order[i];
    auto ls = lss_foliages(t, x);
    const Word g = left_foliage(t, x);
    if (!(concat_all(ls, ls.size(), w.alphabet()) == g)) {
      return "left foliage at " + x.str() + " differs from the lss concatenation";
    }
    if (g.size() != i + 1) return "left foliage at " + x.str() + " has the wrong length";
  }
  return {};
}

std::string check_lss_omega(const Word& w) {
  const MagmaTree t = left_lyndon_tree(w);
  for (const auto& x : internal_nodes(t)) {
    auto ls = lss_foliages(t, x);
    const std::size_t n = ls.size();
    const Word all = concat_all(ls, n, w.alphabet());
    const Word head = concat_all(ls, n - 1, w.alphabet());
    if (ls.back().size() >= 2) {
      auto [first, second] = left_standard_factorization(ls.back());
      if (!omega_less(head + first, all)) return "first lss inequality fails at " + x.str();
    }
    if (n >= 2 && omega_outcome(all, head) == Outcome::Greater) {
      return "second lss inequality fails at " + x.str();
    }
  }
  return {};
}

std::string check_decreasing_labels(const Word& w) {
  const MagmaTree t = left_lyndon_tree(w);
  for (const auto& x : internal_nodes(t)) {
    const Word gx = left_foliage(t, x);
    for (Direction d : {Direction::Left, Direction::Right}) {
      const NodeAddress y = x.child(d);
      if (subtree_at(t, y).is_leaf()) continue;
      const Word gy = left_foliage(t, y);
      if (prec_cmp(gy, gx) >= 0) return "label " + q(gy) + " at " + y.str() + " not below " + q(gx);
    }
  }
  return {};
}

std::string check_projection(const Word& w) {
  const MagmaTree t = left_lyndon_tree(w);
  std::vector<NodeAddress> order;
  in_order(t, NodeAddress::root(), order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!(left_foliage(t, order[i]) == w.prefix(i + 1))) {
      return "in-order label " + std::to_string(i + 1) + " is not the matching prefix";
    }
  }
  return {};
}

std::string check_pstd(const Word& w) {
  auto ps = prefix_standard_permutation(w);
  if (ps.sigma.back() != w.size()) return "last pstd entry is not |w| for " + q(w);
  for (std::size_t i = 0; i < ps.sigma.size(); ++i) {
    if (ps.inverse[ps.sigma[i] - 1] != i + 1) return "sigma and inverse do not compose";
  }
  return {};
}

std::string check_trees(const Word& w) {
  const MagmaTree lst = left_lyndon_tree(w);
  if (!(lst == left_cartesian_tree(w))) return "left Lyndon tree differs from the Cartesian tree";
  if (!(lst == left_cartesian_tree_via_prefixes(w))) return "prefix-based Cartesian tree differs";
  if (!(lst == left_lyndon_tree_naive(w))) return "naive left Lyndon tree differs";
  if (!(foliage(lst) == w)) return "foliage of the left tree is not " + q(w);
  return {};
}

std::string check_right_tree(const Word& w) {
  const MagmaTree rt = right_lyndon_tree(w);
  if (!(rt == right_lyndon_tree_naive(w))) return "right tree differs from naive";
  if (!(foliage(rt) == w)) return "foliage of the right tree is not " + q(w);
  for (const auto& x : internal_nodes(rt)) {
    const Word f = foliage(subtree_at(rt, x));
    auto [u, v] = right_standard_factorization(f);
    if (!is_lyndon(u)) return "right factorization of " + q(f) + " leaves non-Lyndon " + q(u);
  }
  return {};
}

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> all = {
      {"omega_oracle_agreement", false, check_omega_agreement},
      {"fine_wilf_bound", false, check_fine_wilf},
      {"lyndon_definitions_agree", false, check_definitions},
      {"suffix_omega_characterization", false, check_suffix_omega},
      {"prefix_omega_characterization", false, check_prefix_omega},
      {"six_conditions", false, check_six},
      {"bergman_chain", false, check_bergman},
      {"factorization_invariants", false, check_factorization},
      {"factorization_matches_naive", false, check_factorization_naive},
      {"first_factor_characterizations", false, check_first_factor},
      {"last_factor_characterization", false, check_last_factor},
      {"first_factor_dominates_tail", false, check_first_dominates},
      {"lyndon_lex_omega_agree", false, check_lex_omega},
      {"unbordered", true, check_unbordered},
      {"standard_factorization", true, check_standard_factorization},
      {"lss_prefix_chain", true, check_lss_chain},
      {"lss_left_foliage", true, check_lss_foliage},
      {"lss_omega_inequalities", true, check_lss_omega},
      {"decreasing_left_foliage", true, check_decreasing_labels},
      {"left_foliage_projection", true, check_projection},
      {"pstd_last_entry", true, check_pstd},
      {"trees_equal", true, check_trees},
      {"right_factorization", true, check_right_tree},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return names;
}

VerificationReport verify_word(const Word& w) {
  require_nonempty(w);
  VerificationReport report;
  report.word = w;
  const bool lyndon = is_lyndon_naive(w);
  for (const auto& spec : specs()) {
    CheckResult r;
    r.name = spec.name;
    if (spec.lyndon_only && !lyndon) {
      r.status = CheckStatus::Skipped;
    } else {
      try {
        r.detail = spec.run(w);
        r.status = r.detail.empty() ? CheckStatus::Pass : CheckStatus::Fail;
      } catch (const Error& e) {
        r.status = CheckStatus::Fail;
        r.detail = std::string(to_string(e.kind())) + ": " + e.what();
      }
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace lyntree::oracle
