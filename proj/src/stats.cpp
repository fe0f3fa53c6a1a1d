#include "qmcdip/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace qmcdip {

double BlockSeries::mean() const {
  if (block_means.empty()) throw std::logic_error("no blocks accumulated");
  double s = 0.0;
  for (double m : block_means) s += m;
  return s / block_means.size();
}

double BlockSeries::error() const {
  const int b = n_blocks();
  if (b < 2) return 0.0;
  const double m = mean();
  double s2 = 0.0;
  for (double x : block_means) s2 += (x - m) * (x - m);
  s2 /= (b - 1);
  return std::sqrt(s2 / b);
}

BlockSeries BlockSeries::reblocked(int factor) const {
  if (factor < 2) throw std::invalid_argument("reblocking factor must be >= 2");
  BlockSeries out;
  const int full = n_blocks() / factor;
  for (int i = 0; i < full; ++i) {
    double s = 0.0;
    for (int j = 0; j < factor; ++j) s += block_means[i * factor + j];
    out.push(s / factor);
  }
  return out;
}

}  // namespace qmcdip
