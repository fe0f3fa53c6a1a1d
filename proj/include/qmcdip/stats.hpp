#ifndef QMCDIP_STATS_HPP
#define QMCDIP_STATS_HPP

#include <cstdint>
#include <vector>

namespace qmcdip {

// Online mean/variance (Welford).  The merge uses Chan's pairwise update so
// per-walker accumulators can be combined in a fixed order; this keeps the
// variance free of the catastrophic cancellation a naive <E^2>-<E>^2 suffers
// for near-zero-variance estimators.
struct RunningStats {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  void add_weighted(double x, double w, double& wsum) {
    // weighted Welford (West); wsum carried by the caller
    if (w <= 0.0) return;
    ++n;
    const double new_wsum = wsum + w;
    const double d = x - mean;
    mean += (w / new_wsum) * d;
    m2 += w * d * (x - mean);
    wsum = new_wsum;
  }

  void merge(const RunningStats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double d = o.mean - mean;
    const std::int64_t tot = n + o.n;
    mean += d * (static_cast<double>(o.n) / tot);
    m2 += o.m2 + d * d * (static_cast<double>(n) * o.n / tot);
    n = tot;
  }

  double variance() const { return n > 0 ? (m2 > 0.0 ? m2 / n : 0.0) : 0.0; }
};

// Blocked scalar series: one entry per block, error bar from the scatter of
// block means.
struct BlockSeries {
  std::vector<double> block_means;

  void push(double block_mean) { block_means.push_back(block_mean); }
  int n_blocks() const { return static_cast<int>(block_means.size()); }

  double mean() const;
  // std(block means) / sqrt(n_blocks), sample standard deviation
  double error() const;

  // merge adjacent blocks pairwise; used for the blocking-convergence
  // diagnostic (error should be stable once blocks exceed the
  // autocorrelation time)
  BlockSeries reblocked(int factor = 2) const;
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace qmcdip

#endif
