#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dcsplit/core.hpp"
#include "dcsplit/linalg.hpp"

namespace dcsplit {

struct EmptyInputError : Error {
  using Error::Error;
};

struct ClassificationReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double mae = 0.0;
  double mse = 0.0;
  double rmse = 0.0;
  double time_seconds = 0.0;
  std::size_t iterations = 0;
  bool precision_degenerate = false;  // no positive predictions were made
};

inline void require_paired(const std::vector<int>& y_true,
                           const std::vector<int>& y_pred) {
  if (y_true.empty() || y_true.size() != y_pred.size())
    throw EmptyInputError("metric inputs must be non-empty and equal length");
}

inline double accuracy(const std::vector<int>& y_true,
                       const std::vector<int>& y_pred) {
  require_paired(y_true, y_pred);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i)
    if (y_true[i] == y_pred[i]) ++correct;
  return static_cast<double>(correct) / static_cast<double>(y_true.size());
}

// TP / (TP + FP) with positive class +1. When the model makes no positive
// prediction the ratio is undefined; by convention it reports 1.0 (no false
// positives were produced) and sets *degenerate.
inline double precision(const std::vector<int>& y_true,
                        const std::vector<int>& y_pred,
                        bool* degenerate = nullptr) {
  require_paired(y_true, y_pred);
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_pred[i] != 1) continue;
    if (y_true[i] == 1)
      ++tp;
    else
      ++fp;
  }
  if (degenerate) *degenerate = (tp + fp == 0);
  if (tp + fp == 0) return 1.0;
  return static_cast<double>(tp) / static_cast<double>(tp + fp);
}

inline double mae(const std::vector<int>& y_true,
                  const std::vector<int>& y_pred) {
  require_paired(y_true, y_pred);
  double s = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i)
    s += std::abs(static_cast<double>(y_true[i] - y_pred[i]));
  return s / static_cast<double>(y_true.size());
}

inline double mse(const std::vector<int>& y_true,
                  const std::vector<int>& y_pred) {
  require_paired(y_true, y_pred);
  double s = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double d = static_cast<double>(y_true[i] - y_pred[i]);
    s += d * d;
  }
  return s / static_cast<double>(y_true.size());
}

inline double rmse(const std::vector<int>& y_true,
                   const std::vector<int>& y_pred) {
  return std::sqrt(mse(y_true, y_pred));
}

inline double err_measure(const StopRule& rule, const Vector& x_new,
                          const Vector& x_old) {
  if (x_new.size() != x_old.size())
    throw InvalidConfigError("err_measure: dimension mismatch");
  const double step = dist2(x_new, x_old);
  switch (rule.kind) {
    case StopRule::Kind::squared_step:
      return step * step;
    case StopRule::Kind::relative_step:
      return step / std::max(1.0, norm2(x_new));
    case StopRule::Kind::absolute_step:
      return step;
  }
  return step;
}

}  // namespace dcsplit
