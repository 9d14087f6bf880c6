// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "lyntree/infinite_order.hpp"
#include "lyntree/lyndon.hpp"
#include "lyntree/lyndon_trees.hpp"
#include "lyntree/oracle.hpp"
#include "lyntree/prefix_standardization.hpp"
#include "lyntree/render.hpp"

using namespace lyntree;
using lyntree::testing::run_cli;

namespace {

// Collects the first few problems of a criterion.
class Problems {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    return count_ <= 3 ? text_ : text_ + "; ... " + std::to_string(count_) + " in total";
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

const AlphabetPtr kAb = make_alphabet("ab");
const AlphabetPtr kAbc = make_alphabet("abc");

Word W(const std::string& s) { return make_word(s, kAbc); }

std::string golden_pstd(Problems& p) {
  const auto ps = prefix_standard_permutation(W("aabaacab"));
  if (format_permutation(ps.sigma) != "21543768") p.add("sigma is " + format_permutation(ps.sigma));
  auto r = run_cli("pstd aabaacab");
  if (r.exit_code != 0 || r.out.substr(0, r.out.find('\n')) != "21543768") {
    p.add("CLI printed '" + r.out + "'");
  }
  return "pstd(aabaacab) = 21543768";
}

std::string golden_tree(Problems& p) {
  const Word w = W("aabaacab");
  const std::string expected = "(((a,(a,b)),(a,(a,c))),(a,b))";
  const auto lt = left_lyndon_tree(w);
  if (to_canonical(lt) != expected) p.add("left tree is " + to_canonical(lt));
  if (!(left_cartesian_tree(w) == lt)) p.add("Cartesian tree differs");
  return "lst(aabaacab) = " + expected + " = Cartesian tree";
}

std::string golden_labels(Problems& p) {
  const auto t = left_lyndon_tree(W("aabaacab"));
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"", "aabaac"}, {"L", "aab"},     {"LL", "a"}, {"LLR", "aa"},
      {"LR", "aaba"}, {"LRR", "aabaa"}, {"R", "aabaaca"}};
  const auto nodes = internal_nodes(t);
  if (nodes.size() != expected.size()) p.add("wrong number of internal nodes");
  for (const auto& [addr, label] : expected) {
    const auto got = left_foliage(t, NodeAddress::parse(addr)).str();
    if (got != label) p.add("g at '" + addr + "' is " + got);
  }
  return "seven left-foliage labels at their addresses";
}

std::string golden_fine_wilf(Problems& p) {
  const Word u = W("abaab");
  const Word v = W("abaababa");
  const auto c = omega_cmp(u, v);
  if (c.outcome != Outcome::Greater) p.add(std::string("outcome is ") + to_string(c.outcome));
  if (c.mismatch_position != 12u) p.add("mismatch position differs from 12");
  const std::size_t bound = u.size() + v.size() - std::gcd(u.size(), v.size());
  if (bound != 12 || fine_wilf_bound(u.size(), v.size()) != 12) p.add("bound is not 12");
  return "abaab vs abaababa: Greater, mismatch at 12";
}

std::string golden_factorization(Problems& p) {
  const Word w = W("ababaab");
  const auto f = lyndon_factorization(w);
  if (format_factors(f) != "(ab)(ab)(aab)") p.add("factors " + format_factors(f));
  if (first_lyndon_factor(w).str() != "ab") p.add("first factor differs");
  if (first_lyndon_factor(w, FirstFactorRule::PrefixVsRemainder).str() != "ab") {
    p.add("first factor (remainder rule) differs");
  }
  if (last_lyndon_factor(w).str() != "aab") p.add("last factor differs");
  const std::vector<std::string> chain = {"aab", "abaab", "ababaab", "ab", "baab", "babaab", "b"};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (omega_outcome(W(chain[i]), W(chain[j])) != Outcome::Less) {
        p.add(chain[i] + " not below " + chain[j]);
      }
    }
  }
  return "(ab)(ab)(aab) with its seven-term chain";
}

std::string tree_sweep(Problems& p) {
  std::size_t visited = 0;
  for (const auto& [alphabet, max_len] : {std::pair{kAb, std::size_t{14}}, std::pair{kAbc, std::size_t{8}}}) {
    for (const auto& w : enumerate_lyndon_words(alphabet, max_len)) {
      ++visited;
      const auto lt = left_lyndon_tree(w);
      if (!(lt == left_cartesian_tree(w))) p.add("Cartesian differs on " + w.str());
      if (!(lt == left_cartesian_tree_via_prefixes(w))) p.add("prefix build differs on " + w.str());
      if (!(lt == oracle::left_lyndon_tree_naive(w))) p.add("naive differs on " + w.str());
    }
  }
  return std::to_string(visited) + " Lyndon words, four constructions agree";
}

Word first_factor_scan(const Word& w) {
  for (std::size_t len = 1; len <= w.size(); ++len) {
    const Word pre = w.prefix(len);
    if (oracle::omega_cmp_naive(pre, w).outcome != Outcome::Less) return pre;
  }
  return w;
}

Word last_factor_scan(const Word& w) {
  Word best = w.suffix_from(w.size() - 1);
  for (std::size_t start = w.size() - 1; start-- > 0;) {
    const Word s = w.suffix_from(start);
    if (oracle::omega_cmp_naive(s, best).outcome == Outcome::Less) best = s;
  }
  return best;
}

std::string characterization_sweep(Problems& p) {
  const auto words = oracle::all_words(kAb, 12);
  for (const auto& w : words) {
    const bool ref = oracle::is_lyndon_naive(w);
    const bool all[] = {is_lyndon(w, LyndonCondition::SplitLess),
                        is_lyndon(w, LyndonCondition::WordLessSuffix),
                        is_lyndon(w, LyndonCondition::WordLessSwap),
                        is_lyndon_suffix_omega(w, SuffixOmegaCondition::PrefixVsSuffix),
                        is_lyndon_suffix_omega(w, SuffixOmegaCondition::WordVsSuffix),
                        is_lyndon_prefix_omega(w)};
    for (bool b : all) {
      if (b != ref) p.add("characterizations disagree on " + w.str());
    }
    const auto f = lyndon_factorization(w);
    if (f.factors != oracle::lyndon_factorization_naive(w).factors) {
      p.add("factorization differs on " + w.str());
    }
    const Word first = first_factor_scan(w);
    if (!(f.factors.front() == first) || !(first_lyndon_factor(w) == first) ||
        !(first_lyndon_factor(w, FirstFactorRule::PrefixVsRemainder) == first)) {
      p.add("first factor differs on " + w.str());
    }
    const Word last = last_factor_scan(w);
    if (!(f.factors.back() == last) || !(last_lyndon_factor(w) == last)) {
      p.add("last factor differs on " + w.str());
    }
  }
  return std::to_string(words.size()) + " binary words";
}

std::string omega_sweep(Problems& p) {
  const auto words = oracle::all_words(kAb, 8);
  std::size_t pairs = 0;
  for (const auto& u : words) {
    for (const auto& v : words) {
      ++pairs;
      const auto fast = omega_cmp(u, v);
      const auto slow = oracle::omega_cmp_naive(u, v);
      if (fast.outcome != slow.outcome || fast.mismatch_position != slow.mismatch_position) {
        p.add("comparison differs on " + u.str() + ", " + v.str());
      }
      if (fast.mismatch_position && *fast.mismatch_position > fine_wilf_bound(u.size(), v.size())) {
        p.add("bound exceeded on " + u.str() + ", " + v.str());
      }
      if (fast.outcome != Outcome::Equal && !six_conditions(u, v).all_equal()) {
        p.add("six conditions disagree on " + u.str() + ", " + v.str());
      }
      if (fast.outcome == Outcome::Less && !bergman_chain(u, v)) {
        p.add("chain fails on " + u.str() + ", " + v.str());
      }
    }
  }
  return std::to_string(pairs) + " ordered pairs";
}

std::string enumeration_count(Problems& p) {
  const std::vector<std::size_t> expected = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  std::vector<std::size_t> fast(10, 0), slow(10, 0);
  for (const auto& w : enumerate_lyndon_words(kAb, 10)) ++fast[w.size() - 1];
  for (const auto& w : oracle::lyndon_words_by_filter(kAb, 10)) ++slow[w.size() - 1];
  if (fast != expected) p.add("enumerator counts differ");
  if (slow != expected) p.add("filter counts differ");
  return "2,1,2,3,6,9,18,30,56,99";
}

std::string cli_contract(Problems& p) {
  struct Case {
    std::string args;
    int code;
    std::string out;
  };
  const std::vector<Case> cases = {
      {"pstd aabaacab", 0, "21543768\ninverse: 21543768\n"},
      {"tree aabaacab --kind left", 0,
       "(((a,(a,b)),(a,(a,c))),(a,b))\nleft and cartesian trees: equal\n"},
      {"tree aabaacab --kind cartesian", 0,
       "(((a,(a,b)),(a,(a,c))),(a,b))\nleft and cartesian trees: equal\n"},
      {"compare abaab abaababa", 0, "abaab >ω abaababa, mismatch at 12\n"},
      {"factorize ababaab", 0, "(ab)(ab)(aab)\nfirst: ab\nlast: aab\n"},
  };
  for (const auto& c : cases) {
    auto r = run_cli(c.args);
    if (r.exit_code != c.code || r.out != c.out) p.add("'" + c.args + "' printed '" + r.out + "'");
  }

  auto dot = run_cli("--format dot tree aabaacab");
  for (const char* label : {"aabaac", "aab", "\"a\"]", "aa", "aaba", "aabaa", "aabaaca"}) {
    if (dot.exit_code != 0 || dot.out.find(label) == std::string::npos) {
      p.add(std::string("DOT output lacks ") + label);
    }
  }

  auto verify = run_cli("verify --alphabet ab --max-len 10");
  if (verify.exit_code != 0 ||
      verify.out.find("Lyndon words per length: 2,1,2,3,6,9,18,30,56,99\n") == std::string::npos) {
    p.add("verify --max-len 10 did not pass");
  }
  if (run_cli("verify --max-len 3 --expect-counts 2,1,3").exit_code != 1) {
    p.add("failing verification did not exit 1");
  }
  auto usage = run_cli("tree ba --kind left", "err");
  if (usage.exit_code != 2 || usage.out != "not Lyndon: split b|a has u ≥ v\n") {
    p.add("non-Lyndon tree gave exit " + std::to_string(usage.exit_code));
  }
  if (run_cli("compare ab").exit_code != 2) p.add("missing argument did not exit 2");
  return "five subcommands, exit codes 0/1/2";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string(Problems&)>>> criteria = {
      {"pstd golden", golden_pstd},
      {"left Lyndon tree golden", golden_tree},
      {"left foliage labels golden", golden_labels},
      {"periodicity bound golden", golden_fine_wilf},
      {"factorization golden", golden_factorization},
      {"tree equality sweep", tree_sweep},
      {"characterization sweep", characterization_sweep},
      {"infinite order sweep", omega_sweep},
      {"Lyndon counts", enumeration_count},
      {"CLI contract", cli_contract},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Problems p;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = criteria[i].second(p);
    } catch (const std::exception& e) {
      p.add(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s) [%.2fs]\n", p.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), p.ok() ? detail.c_str() : p.summary().c_str(), secs);
    failures += p.ok() ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
