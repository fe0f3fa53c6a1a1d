#include "qmcdip/fitting.hpp"

#include <cmath>

#include "qmcdip/errors.hpp"

namespace qmcdip {

std::vector<double> fit_weights(const std::vector<double>& sigma) {
  bool any_zero = false, any_nonzero = false;
  for (double s : sigma) {
    if (s < 0.0) throw ConfigError("negative uncertainty in fit input");
    (s == 0.0 ? any_zero : any_nonzero) = true;
  }
  if (any_zero && any_nonzero) {
    throw ConfigError("fit input mixes zero and nonzero uncertainties; no relative weighting exists");
  }
  std::vector<double> w(sigma.size(), 1.0);
  if (any_nonzero) {
    for (std::size_t i = 0; i < sigma.size(); ++i) w[i] = 1.0 / (sigma[i] * sigma[i]);
  }
  return w;
}

LinearFit weighted_linear_fit(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<double>& sigma) {
  if (x.size() != y.size() || x.size() != sigma.size() || x.size() < 2) {
    throw ConfigError("linear fit needs >= 2 points of equal-length x/y/sigma");
  }
  const std::vector<double> w = fit_weights(sigma);
  double s = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += w[i];
    sx += w[i] * x[i];
    sxx += w[i] * x[i] * x[i];
    sy += w[i] * y[i];
    sxy += w[i] * x[i] * y[i];
  }
  const double det = s * sxx - sx * sx;
  const double scale = s * sxx;
  if (det <= 0.0 || det < 1e-14 * scale) {
    throw StageError("linear fit is singular (all abscissae identical?)");
  }
  LinearFit f;
  f.intercept = (sxx * sy - sx * sxy) / det;
  f.slope = (s * sxy - sx * sy) / det;
  f.intercept_sigma = std::sqrt(sxx / det);
  f.slope_sigma = std::sqrt(s / det);
  return f;
}

double PolynomialFit::at(double x) const {
  const double t = (x - x0) / scale;
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
  return v;
}

double PolynomialFit::derivative_at(double x) const {
  const double t = (x - x0) / scale;
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) v = v * t + k * coeffs[k];
  return v / scale;
}

double PolynomialFit::second_derivative_at(double x) const {
  const double t = (x - x0) / scale;
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 2;) v = v * t + k * (k - 1) * coeffs[k];
  return v / (scale * scale);
}

PolynomialFit weighted_polynomial_fit(const std::vector<double>& x, const std::vector<double>& y,
                                       const std::vector<double>& sigma, int degree) {
  const int n = static_cast<int>(x.size());
  if (degree < 1) throw ConfigError("polynomial fit degree must be >= 1");
  if (n < degree + 2) throw ConfigError("polynomial fit of degree k needs >= k+2 points");
  const std::vector<double> w = fit_weights(sigma);

  PolynomialFit fit;
  double lo = x[0], hi = x[0];
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  fit.x0 = 0.5 * (lo + hi);
  fit.scale = hi > lo ? 0.5 * (hi - lo) : 1.0;

  Eigen::MatrixXd A(n, degree + 1);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    const double t = (x[i] - fit.x0) / fit.scale;
    const double sw = std::sqrt(w[i]);
    double tk = 1.0;
    for (int k = 0; k <= degree; ++k) {
      A(i, k) = sw * tk;
      tk *= t;
    }
    b(i) = sw * y[i];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  fit.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(sv(sv.size() - 1) > 1e-12 * sv(0))) {
    throw StageError("polynomial fit normal equations are singular (condition " +
                     std::to_string(fit.condition) + ")");
  }
  Eigen::VectorXd c = svd.solve(b);
  fit.coeffs.assign(c.data(), c.data() + c.size());

  // covariance (A^T A)^-1 in the scaled basis
  Eigen::MatrixXd ata = A.transpose() * A;
  fit.covariance = ata.inverse();
  return fit;
}

}  // namespace qmcdip
