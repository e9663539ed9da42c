#include <cmath>
#include <limits>
#include <string>

#include "hsu/metrics.hpp"

namespace hsu {

namespace {

void require_same_shape(const Matrix& x_true, const Matrix& x_hat) {
  if (x_true.rows() != x_hat.rows() || x_true.cols() != x_hat.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "X_true is " + std::to_string(x_true.rows()) + "x" +
                    std::to_string(x_true.cols()) + ", X^ is " + std::to_string(x_hat.rows()) +
                    "x" + std::to_string(x_hat.cols()));
  }
  if (!all_finite(x_true) || !all_finite(x_hat)) {
    throw Error(ErrorCode::NonFiniteInput, "abundance matrices must be finite");
  }
}

}  // namespace

double sre_db(const Matrix& x_true, const Matrix& x_hat) {
  require_same_shape(x_true, x_hat);
  const double signal = x_true.squaredNorm();
  if (signal == 0.0) throw Error(ErrorCode::ZeroReference, "X_true is identically zero");
  const double err = (x_true - x_hat).squaredNorm();
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / err);
}

Vector relative_error_power(const Matrix& x_true, const Matrix& x_hat) {
  require_same_shape(x_true, x_hat);
  const Vector ref = x_true.colwise().squaredNorm().transpose();
  const Vector err = (x_hat - x_true).colwise().squaredNorm().transpose();
  Vector out(ref.size());
  for (Index i = 0; i < ref.size(); ++i) {
    if (ref(i) > 0.0) {
      out(i) = err(i) / ref(i);
    } else {
      out(i) = err(i) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
  }
  return out;
}

double success_probability(const Matrix& x_true, const Matrix& x_hat, double threshold) {
  const Vector rel = relative_error_power(x_true, x_hat);
  if (rel.size() == 0) return 0.0;
  return static_cast<double>((rel.array() <= threshold).count()) /
         static_cast<double>(rel.size());
}

EvalResult evaluate(const Matrix& x_true, const Matrix& x_hat, double threshold) {
  EvalResult r;
  r.sre_db = sre_db(x_true, x_hat);
  r.per_pixel_relative_error = relative_error_power(x_true, x_hat);
  const auto n = r.per_pixel_relative_error.size();
  r.p_s = n == 0 ? 0.0
                 : static_cast<double>((r.per_pixel_relative_error.array() <= threshold).count()) /
                       static_cast<double>(n);
  return r;
}

double mutual_coherence(const SpectralLibrary& a) {
  const Matrix& am = a.matrix();
  const Vector norms = am.colwise().norm().transpose();
  for (Index j = 0; j < norms.size(); ++j) {
    if (norms(j) == 0.0) {
      throw Error(ErrorCode::ZeroColumn, "library column " + std::to_string(j) + " is zero");
    }
  }
  if (am.cols() < 2) return 0.0;
  const Matrix unit = am * norms.cwiseInverse().asDiagonal();
  Matrix g = (unit.transpose() * unit).cwiseAbs();
  g.diagonal().setZero();
  return g.maxCoeff();
}

}  // namespace hsu
