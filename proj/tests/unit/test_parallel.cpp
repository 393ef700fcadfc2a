#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "fzc/parallel.hpp"

using namespace fzc;

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  parallel_for(0, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("parallel_for rethrows worker exceptions") {
  CHECK_THROWS_AS(parallel_for(100,
                               [](std::size_t i) {
                                 if (i == 57) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("FZC_THREADS caps the worker count") {
  ::setenv("FZC_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  ::setenv("FZC_THREADS", "0", 1);
  CHECK(thread_count() >= 1);
  ::unsetenv("FZC_THREADS");
  CHECK(thread_count() >= 1);
}

TEST_CASE("compensated sum recovers cancelled low-order terms") {
  CompensatedSum s;
  s.add({1e16, -1e16});
  s.add({1.0, 1.0});
  s.add({-1e16, 1e16});
  CHECK(s.value().real() == 1.0);
  CHECK(s.value().imag() == 1.0);
}
