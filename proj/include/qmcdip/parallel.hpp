#ifndef QMCDIP_PARALLEL_HPP
#define QMCDIP_PARALLEL_HPP

#include <thread>
#include <vector>

namespace qmcdip {

// Static partition of [0, n) over up to n_threads workers.  Work items must
// be independent; result determinism comes from writing into per-item slots
// and reducing in index order afterwards.
template <typename Fn>
void parallel_for(int n, int n_threads, Fn&& fn) {
  if (n_threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = std::min(n_threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qmcdip

#endif
