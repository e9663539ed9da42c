#pragma once

#include "hsu/types.hpp"

namespace hsu {

/// ||x - x^||^2 / ||x||^2 <= 0.316 counts as a successful pixel (5 dB).
inline constexpr double kDefaultSuccessThreshold = 0.316;

struct EvalResult {
  double sre_db = 0.0;
  double p_s = 0.0;
  Vector per_pixel_relative_error;
};

/// 10 log10( sum ||x_i||^2 / sum ||x_i - x^_i||^2 ). +infinity for an exact
/// estimate; throws ZeroReference when X_true is zero.
double sre_db(const Matrix& x_true, const Matrix& x_hat);

/// Per-pixel relative error power ||x^_i - x_i||^2 / ||x_i||^2. Pixels with
/// x_i = 0 get 0 when x^_i = 0 and +infinity otherwise.
Vector relative_error_power(const Matrix& x_true, const Matrix& x_hat);

double success_probability(const Matrix& x_true, const Matrix& x_hat,
                           double threshold = kDefaultSuccessThreshold);

EvalResult evaluate(const Matrix& x_true, const Matrix& x_hat,
                    double threshold = kDefaultSuccessThreshold);

/// max_{i != j} |<a_i, a_j>| / (||a_i|| ||a_j||); 0 for a single column.
double mutual_coherence(const SpectralLibrary& a);

}  // namespace hsu
