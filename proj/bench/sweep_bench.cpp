// Times the serial reference sweep against the OpenMP sweep and checks that
// both produce the same summary.
//
//   sweep_bench [alphabet] [max_len] [jobs]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "lyntree/sweep.hpp"

int main(int argc, char** argv) {
  const std::string symbols = argc > 1 ? argv[1] : "ab";
  const std::size_t max_len = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 12;
  const int jobs = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();
  auto alphabet = lyntree::make_alphabet(symbols);

  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  };

  auto t0 = clock::now();
  auto serial = lyntree::sweep_serial(alphabet, max_len);
  auto t1 = clock::now();
  auto parallel = lyntree::sweep_parallel(alphabet, max_len, jobs);
  auto t2 = clock::now();

  std::cout << "alphabet " << symbols << ", max length " << max_len << ", " << serial.words_visited
            << " words\n"
            << "serial:   " << ms(t1 - t0) << " ms\n"
            << "parallel: " << ms(t2 - t1) << " ms (" << (jobs > 0 ? jobs : omp_get_max_threads()) << " threads)\n"
            << "summaries " << (serial == parallel ? "match" : "DIFFER") << "\n";
  return serial == parallel && serial.passed() ? 0 : 1;
}
