#ifndef QMCDIP_FITTING_HPP
#define QMCDIP_FITTING_HPP

#include <Eigen/Dense>
#include <vector>

namespace qmcdip {

// y = intercept + slope * x, weighted by 1/sigma^2 (unit weights when every
// sigma is zero).  Throws StageError when the design is singular (e.g. all x
// identical).
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_sigma = 0.0;
  double slope_sigma = 0.0;

  double at(double x) const { return intercept + slope * x; }
};

LinearFit weighted_linear_fit(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<double>& sigma);

// Weighted polynomial least squares in the shifted/scaled variable
// t = (x - x0) / scale (conditioning).  coeffs[k] multiplies t^k.
struct PolynomialFit {
  std::vector<double> coeffs;
  Eigen::MatrixXd covariance;  // of coeffs
  double x0 = 0.0;
  double scale = 1.0;
  double condition = 0.0;

  double at(double x) const;
  double derivative_at(double x) const;
  double second_derivative_at(double x) const;
};

PolynomialFit weighted_polynomial_fit(const std::vector<double>& x, const std::vector<double>& y,
                                      const std::vector<double>& sigma, int degree);

// 1/sigma^2 weights with the all-zero convention; mixed zero/nonzero sigmas
// are rejected (no sensible relative weighting exists).
std::vector<double> fit_weights(const std::vector<double>& sigma);

}  // namespace qmcdip

#endif
