#include "favard/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace favard::parallel {

namespace {

std::atomic<int> g_thread_override{0};

int default_threads() {
  if (const char* env = std::getenv("FAVARD_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int thread_count() {
  const int forced = g_thread_override.load(std::memory_order_relaxed);
  if (forced > 0) return forced;
  static const int resolved = default_threads();
  return resolved;
}

void set_thread_count(int threads) {
  g_thread_override.store(threads > 0 ? threads : 0, std::memory_order_relaxed);
}

void for_range(std::int64_t count, const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  const int workers = std::min<std::int64_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }

  const std::int64_t chunk = std::max<std::int64_t>(1, count / (workers * 16));
  std::atomic<std::int64_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::int64_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= count) return;
      const std::int64_t end = std::min(begin + chunk, count);
      for (std::int64_t i = begin; i < end; ++i) body(i);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 8) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace favard::parallel
