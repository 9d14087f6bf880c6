#include "lyntree/sweep.hpp"

#include <omp.h>

#include "lyntree/lyndon.hpp"

namespace lyntree {

namespace {

SweepSummary empty_summary(std::size_t max_len) {
  SweepSummary s;
  s.tallies.resize(oracle::check_names().size());
  s.lyndon_per_length.assign(max_len, 0);
  return s;
}

void absorb(SweepSummary& s, std::size_t index, const Word& w) {
  auto report = oracle::verify_word(w);
  ++s.words_visited;
  if (is_lyndon(w)) ++s.lyndon_per_length[w.size() - 1];
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    switch (c.status) {
      case oracle::CheckStatus::Pass: ++s.tallies[i].pass; break;
      case oracle::CheckStatus::Skipped: ++s.tallies[i].skipped; break;
      case oracle::CheckStatus::Fail:
        ++s.tallies[i].fail;
        if (!s.first_failure || index < s.first_failure->index) {
          s.first_failure = SweepFailure{index, w.str(), c.name, c.detail};
        }
        break;
    }
  }
}

void require_length(std::size_t max_len) {
  if (max_len == 0) throw Error(ErrorKind::PreconditionFailed, "max length must be at least 1");
}

}  // namespace

std::size_t SweepSummary::lyndon_total() const noexcept {
  std::size_t total = 0;
  for (auto c : lyndon_per_length) total += c;
  return total;
}

void SweepSummary::merge(const SweepSummary& other) {
  if (tallies.size() < other.tallies.size()) tallies.resize(other.tallies.size());
  for (std::size_t i = 0; i < other.tallies.size(); ++i) {
    tallies[i].pass += other.tallies[i].pass;
    tallies[i].fail += other.tallies[i].fail;
    tallies[i].skipped += other.tallies[i].skipped;
  }
  if (lyndon_per_length.size() < other.lyndon_per_length.size()) {
    lyndon_per_length.resize(other.lyndon_per_length.size());
  }
  for (std::size_t i = 0; i < other.lyndon_per_length.size(); ++i) {
    lyndon_per_length[i] += other.lyndon_per_length[i];
  }
  words_visited += other.words_visited;
  if (other.first_failure && (!first_failure || other.first_failure->index < first_failure->index)) {
    first_failure = other.first_failure;
  }
}

SweepSummary sweep_serial(const AlphabetPtr& alphabet, std::size_t max_len) {
  require_length(max_len);
  auto words = oracle::all_words(alphabet, max_len);
  SweepSummary s = empty_summary(max_len);
  for (std::size_t i = 0; i < words.size(); ++i) absorb(s, i, words[i]);
  return s;
}

SweepSummary sweep_parallel(const AlphabetPtr& alphabet, std::size_t max_len, int jobs) {
  require_length(max_len);
  const auto words = oracle::all_words(alphabet, max_len);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<SweepSummary> partial(static_cast<std::size_t>(threads), empty_summary(max_len));
  const auto n = static_cast<std::int64_t>(words.size());

#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    absorb(mine, static_cast<std::size_t>(i), words[static_cast<std::size_t>(i)]);
  }

  SweepSummary s = empty_summary(max_len);
  for (const auto& p : partial) s.merge(p);
  return s;
}

}  // namespace lyntree
