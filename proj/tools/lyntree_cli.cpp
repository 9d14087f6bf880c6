// lyntree: infinite-order comparison, Lyndon factorization, prefix
// standardization and left Lyndon / Cartesian trees from the command line.
//
// Exit codes: 0 success, 1 verification or cross-check failure, 2 usage or
// input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lyntree/infinite_order.hpp"
#include "lyntree/lyndon.hpp"
#include "lyntree/lyndon_trees.hpp"
#include "lyntree/oracle.hpp"
#include "lyntree/prefix_standardization.hpp"
#include "lyntree/render.hpp"
#include "lyntree/sweep.hpp"

namespace {

using namespace lyntree;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

enum class Format { Text, Structured, Dot };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string alphabet;
  std::string format = "text";
};

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "structured" || f == "json") return Format::Structured;
  if (f == "dot") return Format::Dot;
  throw UsageError("unknown format '" + f + "' (text, structured, dot)");
}

AlphabetPtr alphabet_for(const Globals& g, const std::vector<std::string>& words) {
  if (!g.alphabet.empty()) return make_alphabet(g.alphabet);
  std::string all;
  for (const auto& w : words) all += w;
  if (all.empty()) throw UsageError("words must be nonempty");
  return std::make_shared<const OrderedAlphabet>(OrderedAlphabet::natural(all));
}

Word parse_word(const std::string& text, const AlphabetPtr& alphabet) {
  if (text.empty()) throw UsageError("words must be nonempty");
  return make_word(text, alphabet);
}

void no_dot(Format f, const char* command) {
  if (f == Format::Dot) throw UsageError(std::string("--format dot is only valid for tree, not ") + command);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int run_compare(const Globals& g, const std::string& u_text, const std::string& v_text, bool six) {
  const Format format = parse_format(g.format);
  no_dot(format, "compare");
  auto alphabet = alphabet_for(g, {u_text, v_text});
  const Word u = parse_word(u_text, alphabet);
  const Word v = parse_word(v_text, alphabet);
  const auto c = omega_cmp(u, v);
  const auto conditions = six ? std::optional(six_conditions(u, v)) : std::nullopt;

  if (format == Format::Structured) {
    auto j = to_json(c);
    if (conditions) {
      j["six"] = {conditions->c1, conditions->c2, conditions->c3,
                  conditions->c4, conditions->c5, conditions->c6};
    }
    std::cout << j.dump() << "\n";
    return kOk;
  }
  if (c.outcome == Outcome::Equal) {
    std::cout << "equal: powers of " << c.common_root->str() << "\n";
  } else {
    std::cout << u.str() << (c.outcome == Outcome::Less ? " <ω " : " >ω ") << v.str()
              << ", mismatch at " << *c.mismatch_position << "\n";
  }
  if (conditions) {
    std::cout << "(1) u^ω < v^ω: " << yes_no(conditions->c1) << "\n"
              << "(2) (uv)^ω < v^ω: " << yes_no(conditions->c2) << "\n"
              << "(3) u^ω < (vu)^ω: " << yes_no(conditions->c3) << "\n"
              << "(4) (uv)^ω < (vu)^ω: " << yes_no(conditions->c4) << "\n"
              << "(5) u^ω < (uv)^ω: " << yes_no(conditions->c5) << "\n"
              << "(6) (vu)^ω < v^ω: " << yes_no(conditions->c6) << "\n";
  }
  return kOk;
}

int run_factorize(const Globals& g, const std::string& text) {
  const Format format = parse_format(g.format);
  no_dot(format, "factorize");
  auto alphabet = alphabet_for(g, {text});
  const Word w = parse_word(text, alphabet);
  const auto f = lyndon_factorization(w);

  std::vector<std::string> problems;
  if (!(first_lyndon_factor(w, FirstFactorRule::PrefixVsWord) == f.factors.front()) ||
      !(first_lyndon_factor(w, FirstFactorRule::PrefixVsRemainder) == f.factors.front())) {
    problems.push_back("first factor differs from its infinite-order characterization");
  }
  if (!(last_lyndon_factor(w) == f.factors.back())) {
    problems.push_back("last factor differs from its infinite-order characterization");
  }

  if (format == Format::Structured) {
    std::cout << to_json(f).dump() << "\n";
  } else {
    std::cout << format_factors(f) << "\n"
              << "first: " << f.factors.front().str() << "\n"
              << "last: " << f.factors.back().str() << "\n";
  }
  for (const auto& p : problems) std::cerr << "cross-check failed: " << p << "\n";
  return problems.empty() ? kOk : kCheckFailed;
}

int run_pstd(const Globals& g, const std::string& text) {
  const Format format = parse_format(g.format);
  no_dot(format, "pstd");
  auto alphabet = alphabet_for(g, {text});
  const auto ps = prefix_standard_permutation(parse_word(text, alphabet));
  if (format == Format::Structured) {
    std::cout << to_json(ps).dump() << "\n";
  } else {
    std::cout << format_permutation(ps.sigma) << "\n"
              << "inverse: " << format_permutation(ps.inverse) << "\n";
  }
  return kOk;
}

int run_tree(const Globals& g, const std::string& text, const std::string& kind) {
  const Format format = parse_format(g.format);
  auto alphabet = alphabet_for(g, {text});
  const Word w = parse_word(text, alphabet);
  if (auto cut = first_non_lyndon_split(w)) {
    throw UsageError("not Lyndon: split " + w.prefix(*cut).str() + "|" + w.suffix_from(*cut).str() +
                     " has u ≥ v");
  }

  std::optional<MagmaTree> tree;
  bool equal = true;
  if (kind == "right") {
    tree = right_lyndon_tree(w);
  } else {
    auto left = left_lyndon_tree(w);
    auto cartesian = left_cartesian_tree(w);
    equal = left == cartesian;
    tree = kind == "left" ? left : cartesian;
  }

  switch (format) {
    case Format::Text:
      std::cout << to_canonical(*tree) << "\n";
      if (kind != "right") {
        std::cout << "left and cartesian trees: " << (equal ? "equal" : "differ") << "\n";
      }
      break;
    case Format::Structured:
      std::cout << to_json(*tree).dump() << "\n";
      break;
    case Format::Dot:
      std::cout << to_dot(*tree);
      break;
  }
  if (!equal) {
    std::cerr << "left Lyndon tree and left Cartesian tree differ\n";
    return kCheckFailed;
  }
  return kOk;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad count '" + item + "' in --expect-counts");
    }
  }
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

int run_verify(const Globals& g, std::size_t max_len, int jobs, const std::string& expect) {
  const Format format = parse_format(g.format);
  no_dot(format, "verify");
  if (max_len == 0) throw UsageError("--max-len must be at least 1");
  if (jobs < 0) throw UsageError("--jobs must be nonnegative");
  auto alphabet = make_alphabet(g.alphabet.empty() ? "ab" : g.alphabet);
  const auto summary = jobs == 1 ? sweep_serial(alphabet, max_len)
                                 : sweep_parallel(alphabet, max_len, jobs);

  std::string count_problem;
  if (!expect.empty()) {
    auto expected = parse_counts(expect);
    if (expected != summary.lyndon_per_length) {
      count_problem = "Lyndon counts " + join(summary.lyndon_per_length) + " differ from expected " +
                      join(expected);
    }
  }

  const auto& names = oracle::check_names();
  if (format == Format::Structured) {
    nlohmann::json checks = nlohmann::json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& t = summary.tallies[i];
      checks[names[i]] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
    }
    nlohmann::json j = {{"words", summary.words_visited},
                        {"lyndon_per_length", summary.lyndon_per_length},
                        {"checks", checks},
                        {"passed", summary.passed() && count_problem.empty()}};
    if (summary.first_failure) {
      j["first_failure"] = {{"word", summary.first_failure->word},
                            {"check", summary.first_failure->check},
                            {"detail", summary.first_failure->detail}};
    }
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& t = summary.tallies[i];
      std::cout << names[i] << ": " << t.pass << " pass, " << t.fail << " fail, " << t.skipped
                << " skipped\n";
    }
    std::cout << "Lyndon words per length: " << join(summary.lyndon_per_length) << "\n";
    if (summary.passed() && count_problem.empty()) {
      std::cout << "all checks pass; " << summary.lyndon_total() << " Lyndon words visited ("
                << summary.words_visited << " words)\n";
    }
  }
  if (summary.first_failure) {
    const auto& f = *summary.first_failure;
    std::cerr << "FAILED: " << f.check << " on '" << f.word << "': " << f.detail << "\n";
  }
  if (!count_problem.empty()) std::cerr << "FAILED: " << count_problem << "\n";
  return summary.passed() && count_problem.empty() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinite-order comparison, Lyndon factorization and left Lyndon trees"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--alphabet", g.alphabet, "symbols in increasing order (default: sorted input)");
  app.add_option("--format", g.format, "text, structured or dot");

  std::string u, v, w, kind = "left", expect;
  bool six = false;
  std::size_t max_len = 0;
  int jobs = 1;

  auto* compare = app.add_subcommand("compare", "compare u^ω with v^ω");
  compare->add_option("U", u)->required();
  compare->add_option("V", v)->required();
  compare->add_flag("--six", six, "print the six equivalent conditions");

  auto* factorize = app.add_subcommand("factorize", "Lyndon factorization");
  factorize->add_option("W", w)->required();

  auto* pstd = app.add_subcommand("pstd", "prefix standard permutation and its inverse");
  pstd->add_option("W", w)->required();

  auto* tree = app.add_subcommand("tree", "left, right or Cartesian tree of a Lyndon word");
  tree->add_option("W", w)->required();
  tree->add_option("--kind", kind)->check(CLI::IsMember({"left", "right", "cartesian"}));

  auto* verify = app.add_subcommand("verify", "exhaustive check of every word up to a length");
  verify->add_option("--max-len", max_len)->required();
  verify->add_option("--jobs", jobs, "threads; 0 for the OpenMP default");
  verify->add_option("--expect-counts", expect, "comma-separated Lyndon counts per length");

  for (auto* sub : {compare, factorize, pstd, tree, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compare) return run_compare(g, u, v, six);
    if (*factorize) return run_factorize(g, w);
    if (*pstd) return run_pstd(g, w);
    if (*tree) return run_tree(g, w, kind);
    if (*verify) return run_verify(g, max_len, jobs, expect);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalError ? kCheckFailed : kUsage;
  }
  return kUsage;
}
