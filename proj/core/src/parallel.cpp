#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hsu/parallel.hpp"

namespace hsu {

unsigned thread_budget() {
  if (const char* env = std::getenv("HSU_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(Index count, const std::function<void(Index, Index)>& body, unsigned threads) {
  if (count <= 0) return;
  const Index workers = std::min<Index>(std::max(1u, threads), count);
  if (workers == 1) {
    body(0, count);
    return;
  }
  const Index chunk = (count + workers - 1) / workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto guarded = [&](Index begin, Index end) {
    try {
      body(begin, end);
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (Index w = 1; w < workers; ++w) {
      const Index begin = w * chunk;
      const Index end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(guarded, begin, end);
    }
    guarded(0, std::min(count, chunk));
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hsu
