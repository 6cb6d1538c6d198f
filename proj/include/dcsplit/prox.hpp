#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "dcsplit/linalg.hpp"

namespace dcsplit {

// ---------------------------------------------------------------------------
// Function families used by the three benchmark models. Each struct is an
// immutable parameter bundle; the operators below are pure.
// ---------------------------------------------------------------------------

// f(x) = 1/2 x^T Q x + c^T x + d. Q may be rectangular (M x N, M >= N); the
// rectangular path mirrors a NumPy-style eye(M,N) workaround, see
// quadratic_prox_pinv below.
struct QuadraticFn {
  Matrix Q;
  Vector c;
  double d = 0.0;
};

// Componentwise Huber: 1/2 t^2 for |t| <= delta, delta(|t| - delta/2) beyond.
// Gradient is 1-Lipschitz for any delta.
struct HuberFn {
  double delta = 0.001;
};

// h(w) = sum_i mu (|w_i|/eps - log(|w_i|+eps) + log eps); gradient Lipschitz
// constant mu/eps^2.
struct LogRegularizer {
  double mu = 0.001;
  double epsilon = 0.5;

  double lipschitz() const { return mu / (epsilon * epsilon); }
};

// f(w,b) = quad_coeff*||w||^2 + C sum_i max(0, 1 - y_i (w^T x_i + b)).
struct HingeQuadraticFn {
  Matrix X;            // one sample per row
  std::vector<int> y;  // labels in {-1,+1}
  double C = 1.0;
  double quad_coeff = 1.0;
};

inline double sign_of(double t) { return t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0); }

// ---------------------------------------------------------------------------
// Values (used for objectives and test oracles).
// ---------------------------------------------------------------------------

inline double huber_value(const Vector& x, const HuberFn& fn) {
  double s = 0.0;
  for (double t : x) {
    const double at = std::abs(t);
    s += at <= fn.delta ? 0.5 * t * t : fn.delta * (at - 0.5 * fn.delta);
  }
  return s;
}

inline double log_regularizer_value(const Vector& w, const LogRegularizer& fn) {
  double s = 0.0;
  for (double t : w) {
    const double at = std::abs(t);
    s += fn.mu * (at / fn.epsilon - std::log(at + fn.epsilon) +
                  std::log(fn.epsilon));
  }
  return s;
}

inline double l1_norm(const Vector& x) {
  double s = 0.0;
  for (double t : x) s += std::abs(t);
  return s;
}

// Rectangular Q reads x^T Q x through the zero-padding convention: the
// variable lives in R^N and only the top N x N block of Q contributes.
inline double quadratic_value(const QuadraticFn& fn, const Vector& x) {
  double quad = 0.0;
  for (std::size_t i = 0; i < std::min(fn.Q.rows, x.size()); ++i) {
    const double* row = &fn.Q.a[i * fn.Q.cols];
    double s = 0.0;
    for (std::size_t j = 0; j < fn.Q.cols; ++j) s += row[j] * x[j];
    quad += x[i] * s;
  }
  return 0.5 * quad + dot(fn.c, x) + fn.d;
}

inline double hinge_quadratic_value(const HingeQuadraticFn& fn, const Vector& w,
                                    double b) {
  double s = fn.quad_coeff * dot(w, w);
  for (std::size_t i = 0; i < fn.X.rows; ++i) {
    double m = b;
    const double* row = &fn.X.a[i * fn.X.cols];
    for (std::size_t j = 0; j < fn.X.cols; ++j) m += row[j] * w[j];
    s += fn.C * std::max(0.0, 1.0 - fn.y[i] * m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Proximal operators and gradients.
// ---------------------------------------------------------------------------

inline Vector soft_threshold(const Vector& x, double lambda) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = sign_of(x[i]) * std::max(std::abs(x[i]) - lambda, 0.0);
  return r;
}

// Square path: prox_{beta f}(x) = (Q + I/beta)^-1 (x/beta - c).
inline LuFactorization quadratic_prox_factorization(const QuadraticFn& fn,
                                                    double beta) {
  Matrix s = fn.Q;
  for (std::size_t i = 0; i < s.rows; ++i) s(i, i) += 1.0 / beta;
  return LuFactorization::compute(s);
}

// Rectangular path: P = pinv(Q + (1/beta) I_pad) with I_pad the M x N matrix
// holding ones on the main diagonal. P is N x M, so the N-dimensional
// argument is zero-padded to length M before applying it. Requires M >= N.
inline Matrix quadratic_prox_pinv(const QuadraticFn& fn, double beta) {
  if (fn.Q.rows < fn.Q.cols)
    throw InvalidConfigError("prox_quadratic: rectangular Q needs rows >= cols");
  Matrix s = fn.Q;
  for (std::size_t i = 0; i < s.cols; ++i) s(i, i) += 1.0 / beta;
  return pseudo_inverse(s);
}

inline Vector apply_quadratic_prox_rect(const Matrix& pinv,
                                        const QuadraticFn& fn, double beta,
                                        const Vector& x) {
  Vector padded(fn.Q.rows, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    padded[i] = x[i] / beta - fn.c[i];
  return mat_vec(pinv, padded);
}

inline Vector prox_quadratic(const QuadraticFn& fn, double beta,
                             const Vector& x) {
  if (beta <= 0) throw InvalidConfigError("prox_quadratic: beta must be > 0");
  if (fn.Q.rows == fn.Q.cols) {
    Vector rhs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = x[i] / beta - fn.c[i];
    return quadratic_prox_factorization(fn, beta).solve(rhs);
  }
  return apply_quadratic_prox_rect(quadratic_prox_pinv(fn, beta), fn, beta, x);
}

enum class LinearSolveMethod { lu, cg };

inline constexpr double kCgTolerance = 1e-12;

// Solves (beta A^T A + I) y = beta A^T b + u, the prox of 1/2 ||A. - b||^2.
inline Vector prox_least_squares(const Matrix& A, const Vector& b, double beta,
                                 const Vector& u,
                                 LinearSolveMethod method = LinearSolveMethod::lu,
                                 bool* cg_converged = nullptr) {
  if (beta <= 0)
    throw InvalidConfigError("prox_least_squares: beta must be > 0");
  Vector rhs = mat_t_vec(A, b);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = beta * rhs[i] + u[i];
  if (method == LinearSolveMethod::lu) {
    Matrix s = gram(A);
    for (double& v : s.a) v *= beta;
    for (std::size_t i = 0; i < s.rows; ++i) s(i, i) += 1.0;
    if (cg_converged) *cg_converged = true;
    return LuFactorization::compute(s).solve(rhs);
  }
  const auto apply = [&](const Vector& v) {
    Vector r = mat_t_vec(A, mat_vec(A, v));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = beta * r[i] + v[i];
    return r;
  };
  const CgResult cg = conjugate_gradient(apply, rhs, kCgTolerance,
                                         std::max<std::size_t>(rhs.size() * 4, 200));
  if (cg_converged) *cg_converged = cg.converged;
  return cg.x;
}

inline Vector grad_huber(const Vector& x, const HuberFn& fn) {
  Vector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = std::abs(x[i]) <= fn.delta ? x[i] : fn.delta * sign_of(x[i]);
  return g;
}

inline Vector grad_log_regularizer(const Vector& w, const LogRegularizer& fn) {
  Vector g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    g[i] = fn.mu * sign_of(w[i]) *
           (1.0 / fn.epsilon - 1.0 / (std::abs(w[i]) + fn.epsilon));
  return g;
}

inline Vector grad_half_sq_norm(const Vector& w) { return w; }

// ---------------------------------------------------------------------------
// Prox of the hinge-plus-quadratic SVM objective.
//
// min_{w,b} quad_coeff*||w||^2 + C sum_i max(0, 1 - y_i(w^T x_i + b))
//           + (||w - u_w||^2 + (b - u_b)^2) / (2 beta)
//
// Solved in the dual: one multiplier a_i in [0, C] per sample, with
//   w(a) = (u_w + beta X^T (a.y)) / D,  D = 2*quad_coeff*beta + 1,
//   b(a) = u_b + beta sum_i a_i y_i.
// The dual is a box-constrained concave quadratic; a deterministic cyclic
// pass does the exact per-coordinate maximization
//   a_i <- clip(a_i + (1 - y_i(w^T x_i + b)) / q_i, 0, C),
//   q_i = beta ||x_i||^2 / D + beta,
// updating (w, b) incrementally. Stops when a full pass moves the iterate by
// less than 1e-8, or after 200 passes (flag carried, not fatal).
// ---------------------------------------------------------------------------

struct HingeProxResult {
  Vector w;
  double b = 0.0;
  bool converged = true;
  std::size_t passes = 0;
};

inline constexpr double kHingeProxTol = 1e-8;
inline constexpr std::size_t kHingeProxMaxPasses = 200;

inline HingeProxResult prox_hinge_quadratic(const HingeQuadraticFn& fn,
                                            double beta, const Vector& u_w,
                                            double u_b) {
  if (beta <= 0)
    throw InvalidConfigError("prox_hinge_quadratic: beta must be > 0");
  const std::size_t n = fn.X.rows;
  const std::size_t d = fn.X.cols;
  const double D = 2.0 * fn.quad_coeff * beta + 1.0;

  HingeProxResult res;
  res.w = scaled(1.0 / D, u_w);
  res.b = u_b;
  if (fn.C <= 0.0 || n == 0) return res;

  std::vector<double> a(n, 0.0);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sq = 0.0;
    const double* row = &fn.X.a[i * d];
    for (std::size_t j = 0; j < d; ++j) sq += row[j] * row[j];
    q[i] = beta * sq / D + beta;
  }

  res.converged = false;
  for (std::size_t pass = 0; pass < kHingeProxMaxPasses; ++pass) {
    const Vector w_before = res.w;
    const double b_before = res.b;
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = &fn.X.a[i * d];
      double margin = res.b;
      for (std::size_t j = 0; j < d; ++j) margin += row[j] * res.w[j];
      const double grad = 1.0 - fn.y[i] * margin;
      const double a_new = std::clamp(a[i] + grad / q[i], 0.0, fn.C);
      const double delta = a_new - a[i];
      if (delta == 0.0) continue;
      a[i] = a_new;
      const double step = beta * delta * fn.y[i];
      for (std::size_t j = 0; j < d; ++j) res.w[j] += step * row[j] / D;
      res.b += step;
    }
    res.passes = pass + 1;
    if (dist2(res.w, w_before) + std::abs(res.b - b_before) < kHingeProxTol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace dcsplit
