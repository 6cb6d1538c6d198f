#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "dcsplit/core.hpp"
#include "dcsplit/data.hpp"
#include "dcsplit/linalg.hpp"
#include "dcsplit/prox.hpp"

namespace dcsplit {

// ---------------------------------------------------------------------------
// Quadratic + l1 - Huber.
//
// f(x) = 1/2 x^T Q x + c^T x + d, g = l1_weight * ||.||_1, h = Huber(delta).
// Q is a seeded Gaussian M x N matrix by default; with spd set it becomes
// G^T G + 0.1 I (square N x N), which makes f genuinely strongly convex.
// ---------------------------------------------------------------------------

struct QuadL1HuberSpec {
  std::size_t M = 100;
  std::size_t N = 25;
  double kappa = 0.009;  // default relaxation step the benchmark presets mirror
  double delta = 0.001;
  double l1_weight = 1.0;
  bool spd = false;
  RngSeed seed;
};

namespace detail {

// Solves for the prox of the quadratic once per distinct beta; runs share
// problems only through const access, so the cache carries its own lock.
struct QuadProxCache {
  std::mutex m;
  std::map<double, LuFactorization> lu_by_beta;
  std::map<double, Matrix> pinv_by_beta;
};

}  // namespace detail

inline DCProblem build_quad_l1_huber(const QuadL1HuberSpec& spec) {
  if (spec.M < 1 || spec.N < 1)
    throw InvalidConfigError("quad_l1_huber: M, N must be >= 1");
  if (!(spec.delta > 0.0))
    throw InvalidConfigError("quad_l1_huber: delta must be > 0");
  if (spec.l1_weight < 0.0)
    throw InvalidConfigError("quad_l1_huber: l1_weight must be >= 0");

  auto fn = std::make_shared<QuadraticFn>();
  if (spec.spd) {
    const Matrix g = gaussian_matrix(spec.N, spec.N, spec.seed.derive(1));
    fn->Q = gram(g);
    for (std::size_t i = 0; i < spec.N; ++i) fn->Q(i, i) += 0.1;
  } else {
    fn->Q = gaussian_matrix(spec.M, spec.N, spec.seed.derive(1));
  }
  fn->c = gaussian_vector(spec.N, spec.seed.derive(2));
  fn->d = 0.0;

  auto cache = std::make_shared<detail::QuadProxCache>();
  const double l1w = spec.l1_weight;
  const HuberFn huber{spec.delta};

  DCProblem p;
  p.dim = spec.N;
  p.prox_f = [fn, cache](double beta, const Vector& x) {
    if (fn->Q.rows == fn->Q.cols) {
      Vector rhs(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        rhs[i] = x[i] / beta - fn->c[i];
      std::scoped_lock lock(cache->m);
      auto it = cache->lu_by_beta.find(beta);
      if (it == cache->lu_by_beta.end())
        it = cache->lu_by_beta
                 .emplace(beta, quadratic_prox_factorization(*fn, beta))
                 .first;
      return it->second.solve(rhs);
    }
    std::scoped_lock lock(cache->m);
    auto it = cache->pinv_by_beta.find(beta);
    if (it == cache->pinv_by_beta.end())
      it = cache->pinv_by_beta.emplace(beta, quadratic_prox_pinv(*fn, beta))
               .first;
    return apply_quadratic_prox_rect(it->second, *fn, beta, x);
  };
  p.prox_g = [l1w](double beta, const Vector& x) {
    return soft_threshold(x, beta * l1w);
  };
  p.grad_h = [huber](const Vector& x) { return grad_huber(x, huber); };
  p.objective = [fn, l1w, huber](const Vector& x) {
    return quadratic_value(*fn, x) + l1w * l1_norm(x) - huber_value(x, huber);
  };
  // g is the l1 term: convex but not strongly convex.
  p.strong_convexity_rho = 0.0;
  p.lipschitz_L = 1.0;  // componentwise Huber gradient
  return p;
}

// ---------------------------------------------------------------------------
// Regularized least squares with logarithmic regularizer.
//
//   J(w) = 1/2 ||Aw - b||^2 + sum_i (mu log(|w_i| + eps) - mu log eps)
//
// split as f = 1/2 ||Aw - b||^2, g = (mu/eps) ||w||_1,
// h(w) = sum_i mu (|w_i|/eps - log(|w_i|+eps) + log eps).
// A is column-normalized Gaussian, b Gaussian (non-zero). mu = 0 is accepted
// and degenerates to plain least squares (g = h = 0).
// ---------------------------------------------------------------------------

struct RlsLogSpec {
  std::size_t m = 100;
  std::size_t N = 50;
  double mu = 0.001;
  double epsilon = 0.5;
  LinearSolveMethod solve_method = LinearSolveMethod::lu;
  RngSeed seed;
};

namespace detail {

struct LsProxCache {
  std::mutex m;
  std::map<double, LuFactorization> lu_by_beta;
};

}  // namespace detail

inline DCProblem build_rls_log(const RlsLogSpec& spec) {
  if (spec.m < 1 || spec.N < 1)
    throw InvalidConfigError("rls_log: m, N must be >= 1");
  if (spec.mu < 0.0) throw InvalidConfigError("rls_log: mu must be >= 0");
  if (!(spec.epsilon > 0.0))
    throw InvalidConfigError("rls_log: epsilon must be > 0");

  auto A = std::make_shared<Matrix>(
      gaussian_matrix(spec.m, spec.N, spec.seed.derive(1), true));
  auto b = std::make_shared<Vector>(gaussian_vector(spec.m, spec.seed.derive(2)));
  if (norm2(*b) == 0.0) throw InvalidConfigError("rls_log: b is zero");
  auto atb = std::make_shared<Vector>(mat_t_vec(*A, *b));
  auto ata = std::make_shared<Matrix>(gram(*A));
  auto cache = std::make_shared<detail::LsProxCache>();

  const LogRegularizer reg{spec.mu, spec.epsilon};
  const double l1w = spec.mu / spec.epsilon;
  const LinearSolveMethod method = spec.solve_method;

  DCProblem p;
  p.dim = spec.N;
  p.prox_f = [A, b, atb, ata, cache, method](double beta, const Vector& u) {
    Vector rhs(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      rhs[i] = beta * (*atb)[i] + u[i];
    if (method == LinearSolveMethod::lu) {
      std::scoped_lock lock(cache->m);
      auto it = cache->lu_by_beta.find(beta);
      if (it == cache->lu_by_beta.end()) {
        Matrix s = *ata;
        for (double& v : s.a) v *= beta;
        for (std::size_t i = 0; i < s.rows; ++i) s(i, i) += 1.0;
        it = cache->lu_by_beta.emplace(beta, LuFactorization::compute(s)).first;
      }
      return it->second.solve(rhs);
    }
    const auto apply = [&](const Vector& v) {
      Vector r = mat_vec(*ata, v);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = beta * r[i] + v[i];
      return r;
    };
    return conjugate_gradient(apply, rhs, kCgTolerance,
                              std::max<std::size_t>(rhs.size() * 4, 200))
        .x;
  };
  p.prox_g = [l1w](double beta, const Vector& x) {
    return soft_threshold(x, beta * l1w);
  };
  p.grad_h = [reg](const Vector& w) { return grad_log_regularizer(w, reg); };
  p.objective = [A, b, reg, l1w](const Vector& w) {
    const Vector r = sub(mat_vec(*A, w), *b);
    return 0.5 * dot(r, r) + l1w * l1_norm(w) - log_regularizer_value(w, reg);
  };
  p.strong_convexity_rho = 0.0;
  p.lipschitz_L = reg.lipschitz();
  return p;
}

// ---------------------------------------------------------------------------
// l1-regularized linear SVM.
//
// Variable is (w, b) stacked, dimension d+1, b last. g and h act on the w
// block only; the bias is never shrunk.
// ---------------------------------------------------------------------------

struct SvmSpec {
  double C = 1.0;
  double lambda = 0.001;
  double quad_coeff = 1.0;  // coefficient on ||w||^2 inside f
};

inline DCProblem build_svm(const SvmSpec& spec, const Dataset& train) {
  if (!(spec.C >= 0.0)) throw InvalidConfigError("svm: C must be >= 0");
  if (!(spec.lambda >= 0.0)) throw InvalidConfigError("svm: lambda must be >= 0");
  for (int label : train.y)
    if (label != 1 && label != -1)
      throw InvalidConfigError("svm: labels must be +-1");
  if (train.size() == 0) throw InvalidConfigError("svm: empty training set");

  auto fn = std::make_shared<HingeQuadraticFn>();
  fn->X = train.X;
  fn->y = train.y;
  fn->C = spec.C;
  fn->quad_coeff = spec.quad_coeff;
  const std::size_t d = train.X.cols;
  const double lambda = spec.lambda;

  DCProblem p;
  p.dim = d + 1;
  p.inner_not_converged_count = std::make_shared<std::atomic<std::size_t>>(0);
  auto counter = p.inner_not_converged_count;
  p.prox_f = [fn, d, counter](double beta, const Vector& x) {
    Vector w(x.begin(), x.begin() + d);
    const HingeProxResult r = prox_hinge_quadratic(*fn, beta, w, x[d]);
    if (!r.converged) counter->fetch_add(1);
    Vector out = r.w;
    out.push_back(r.b);
    return out;
  };
  p.prox_g = [d, lambda](double beta, const Vector& x) {
    Vector out(x.size());
    for (std::size_t i = 0; i < d; ++i)
      out[i] = sign_of(x[i]) * std::max(std::abs(x[i]) - beta * lambda, 0.0);
    out[d] = x[d];
    return out;
  };
  p.grad_h = [d](const Vector& x) {
    Vector g(x.begin(), x.begin() + d);
    g.push_back(0.0);
    return g;
  };
  p.objective = [fn, d, lambda](const Vector& x) {
    const Vector w(x.begin(), x.begin() + d);
    double l1 = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      l1 += std::abs(x[i]);
      sq += x[i] * x[i];
    }
    return hinge_quadratic_value(*fn, w, x[d]) + lambda * l1 - 0.5 * sq;
  };
  p.strong_convexity_rho = 0.0;
  p.lipschitz_L = 1.0;
  return p;
}

// label_i = sign(w^T x_i + b), with sign(0) = +1.
inline std::vector<int> predict_svm(const Vector& w, double b,
                                    const Matrix& X) {
  if (w.size() != X.cols)
    throw InvalidConfigError("predict_svm: dimension mismatch");
  std::vector<int> labels(X.rows);
  for (std::size_t i = 0; i < X.rows; ++i) {
    double m = b;
    const double* row = &X.a[i * X.cols];
    for (std::size_t j = 0; j < X.cols; ++j) m += row[j] * w[j];
    labels[i] = m >= 0.0 ? 1 : -1;
  }
  return labels;
}

}  // namespace dcsplit
