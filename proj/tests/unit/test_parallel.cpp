#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hsu/parallel.hpp"

namespace hsu {
namespace {

TEST(ParallelFor, CoversRangeOnce) {
  for (unsigned threads : {1U, 2U, 3U, 8U}) {
    std::vector<int> hits(37, 0);
    parallel_for(
        37,
        [&](Index b, Index e) {
          for (Index i = b; i < e; ++i) ++hits[static_cast<std::size_t>(i)];
        },
        threads);
    for (int h : hits) EXPECT_EQ(h, 1);
  }
  std::atomic<int> calls = 0;
  parallel_for(0, [&](Index, Index) { ++calls; }, 4);
  EXPECT_EQ(calls, 0);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(
                   10, [](Index b, Index) { if (b == 0) throw std::runtime_error("boom"); }, 3),
               std::runtime_error);
}

TEST(ThreadBudget, ReadsEnvironment) {
  ::setenv("HSU_THREADS", "3", 1);
  EXPECT_EQ(thread_budget(), 3U);
  ::setenv("HSU_THREADS", "0", 1);
  EXPECT_GE(thread_budget(), 1U);
  ::unsetenv("HSU_THREADS");
  EXPECT_GE(thread_budget(), 1U);
}

}  // namespace
}  // namespace hsu
