#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcsplit/core.hpp"
#include "dcsplit/linalg.hpp"
#include "dcsplit/metrics.hpp"

namespace dcsplit {

// ---------------------------------------------------------------------------
// The five iterative methods behind one stepping interface.
//
//   drs_theta : theta-averaged Douglas-Rachford splitting
//   drs_alpha : alpha-averaged Douglas-Rachford splitting
//   gdcp      : the unified Douglas-Rachford baseline (theta = 0 / alpha = 0)
//   dca       : linearize the concave part, solve the convex subproblem
//   admm      : two-block ADMM with the concave part linearized per round
// ---------------------------------------------------------------------------

enum class MethodTag { drs_theta, drs_alpha, gdcp, dca, admm };

struct Method {
  MethodTag tag = MethodTag::drs_theta;
  double admm_penalty = 1.0;
  std::size_t dca_inner_budget = 500;
  double dca_inner_tol = 1e-8;
};

inline std::string method_name(MethodTag tag) {
  switch (tag) {
    case MethodTag::drs_theta: return "drs-theta";
    case MethodTag::drs_alpha: return "drs-alpha";
    case MethodTag::gdcp: return "gdcp";
    case MethodTag::dca: return "dca";
    case MethodTag::admm: return "admm";
  }
  return "?";
}

struct RunResult {
  Vector x;  // final iterate
  RunTrace trace;
  Method method;
  SolverConfig config;
  Vector x0, v0;
  IterateState final_state;
  // Filled only when config.record_iterates is set; index n holds the
  // iterate after n steps (index 0 = starting point).
  std::vector<Vector> x_history;
  std::vector<Vector> v_history;
};

// ---------------------------------------------------------------------------
// Single steps. state.n counts completed steps; schedules are evaluated at
// n+1 so that the first step uses index 1.
// ---------------------------------------------------------------------------

namespace detail {

// y = prox_{bf}(u); z = prox_{bg}(2y - u + b grad_h(y)); x+ = u + k (z - y)
inline void splitting_core(const DCProblem& p, double beta, double kappa,
                           const Vector& u, Vector& y, Vector& z,
                           Vector& x_next) {
  y = p.prox_f(beta, u);
  Vector w = p.grad_h(y);
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = 2.0 * y[i] - u[i] + beta * w[i];
  z = p.prox_g(beta, w);
  x_next = u;
  axpy(kappa, sub(z, y), x_next);
}

}  // namespace detail

inline IterateState drs_theta_step(const IterateState& state,
                                   const DCProblem& problem,
                                   const SolverConfig& config) {
  const std::size_t n = state.n + 1;
  const double theta = config.theta;
  const double cx = 1.0 / (1.0 + theta);
  const double cv = theta / (1.0 + theta);
  IterateState next;
  next.n = n;
  next.u = lin_comb(cx, state.x, cv, state.v);
  detail::splitting_core(problem, config.beta, config.kappa.at(n), next.u,
                         next.y, next.z, next.x);
  next.v = lin_comb(cx, next.x, cv, state.v);
  return next;
}

inline IterateState drs_alpha_step(const IterateState& state,
                                   const DCProblem& problem,
                                   const SolverConfig& config) {
  const std::size_t n = state.n + 1;
  const double alpha = config.alpha.at(n);
  IterateState next;
  next.n = n;
  next.u = lin_comb(1.0 - alpha, state.x, alpha, state.v);
  detail::splitting_core(problem, config.beta, config.kappa.at(n), next.u,
                         next.y, next.z, next.x);
  next.v = lin_comb(1.0 - alpha, state.v, alpha, state.x);
  return next;
}

inline IterateState gdcp_step(const IterateState& state,
                              const DCProblem& problem,
                              const SolverConfig& config) {
  const std::size_t n = state.n + 1;
  IterateState next;
  next.n = n;
  next.u = state.x;
  detail::splitting_core(problem, config.beta, config.kappa.at(n), next.u,
                         next.y, next.z, next.x);
  next.v = next.x;
  return next;
}

// DCA: x+ ~= argmin f(x) + g(x) - <grad_h(x_n), x>, solved by a
// Douglas-Rachford loop on f and the tilted g (its prox is the g-prox of a
// shifted point), warm-started at x_n. A descent safeguard keeps x_n if the
// inexact inner solve would raise the objective by more than 1e-8.
inline IterateState dca_step(const IterateState& state,
                             const DCProblem& problem,
                             const SolverConfig& config,
                             const Method& method,
                             std::size_t* inner_steps = nullptr) {
  const double beta = config.beta;
  const Vector s = problem.grad_h(state.x);
  IterateState next;
  next.n = state.n + 1;

  Vector t = state.x;
  Vector y, z;
  bool inner_converged = false;
  std::size_t pairs = 0;
  for (std::size_t it = 0; it < method.dca_inner_budget; ++it) {
    y = problem.prox_f(beta, t);
    Vector w(t.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] = 2.0 * y[i] - t[i] + beta * s[i];
    z = problem.prox_g(beta, w);
    ++pairs;
    const Vector d = sub(z, y);
    axpy(1.0, d, t);
    if (norm2(d) < method.dca_inner_tol) {
      inner_converged = true;
      break;
    }
  }
  if (inner_steps) *inner_steps = pairs;
  if (!inner_converged && problem.inner_not_converged_count)
    problem.inner_not_converged_count->fetch_add(1);

  next.x = y;
  if (problem.objective &&
      problem.objective(next.x) > problem.objective(state.x) + 1e-8) {
    next.x = state.x;
    if (problem.inner_not_converged_count)
      problem.inner_not_converged_count->fetch_add(1);
  }
  next.u = t;
  next.y = y;
  next.z = z;
  next.v = next.x;
  return next;
}

// ADMM on min f(x) + q(z) s.t. x = z, where q(z) = g(z) - <grad_h(x_n), z>
// linearizes the concave part at the round's starting x-block. Scaled form
// with penalty rho (so the prox parameter is 1/rho):
//   x+ = prox_{(1/rho) f}(z - u)
//   z+ = prox_{(1/rho) g}(x+ + u + (1/rho) grad_h(x_n))
//   u+ = u + x+ - z+
inline IterateState admm_step(const IterateState& state,
                              const DCProblem& problem,
                              const SolverConfig& config,
                              const Method& method) {
  (void)config;
  const double rho = method.admm_penalty;
  if (!(rho > 0.0)) throw InvalidConfigError("admm penalty must be > 0");
  const double beta = 1.0 / rho;
  const Vector ghat = problem.grad_h(state.x);
  IterateState next;
  next.n = state.n + 1;
  next.x = problem.prox_f(beta, sub(state.z, state.u));
  Vector w(next.x.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = next.x[i] + state.u[i] + beta * ghat[i];
  next.z = problem.prox_g(beta, w);
  next.u = state.u;
  for (std::size_t i = 0; i < next.u.size(); ++i)
    next.u[i] += next.x[i] - next.z[i];
  next.y = next.x;
  next.v = next.x;
  return next;
}

// ---------------------------------------------------------------------------
// Fixed-point residuals: r1 = ||x - prox_{bf}(u)||,
// r2 = ||x - prox_{bg}(2x - u + b grad_h(x))||. Both vanish exactly at a
// stationary pair.
// ---------------------------------------------------------------------------

inline std::pair<double, double> stationarity_residuals(const Vector& x,
                                                        const Vector& u,
                                                        const DCProblem& problem,
                                                        double beta) {
  if (!(beta > 0.0))
    throw InvalidConfigError("stationarity_residuals: beta must be > 0");
  const double r1 = dist2(x, problem.prox_f(beta, u));
  Vector w = problem.grad_h(x);
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = 2.0 * x[i] - u[i] + beta * w[i];
  const double r2 = dist2(x, problem.prox_g(beta, w));
  return {r1, r2};
}

// ---------------------------------------------------------------------------
// Driver.
// ---------------------------------------------------------------------------

inline IterateState make_initial_state(MethodTag tag, const Vector& x0,
                                       const Vector& v0) {
  IterateState s;
  s.n = 0;
  s.x = x0;
  s.v = v0;
  s.y = x0;
  s.z = x0;
  s.u = tag == MethodTag::admm ? Vector(x0.size(), 0.0) : x0;
  return s;
}

// Runs the chosen method until the stop rule fires or max_iter is reached.
// Oracle failures propagate; when partial_on_error is given, the trace
// accumulated up to the failure is preserved there.
inline RunResult solve(const DCProblem& problem, const Method& method,
                       const SolverConfig& config, const Vector& x0,
                       std::optional<Vector> v0_opt = std::nullopt,
                       RunResult* partial_on_error = nullptr) {
  config.validate();
  if (x0.size() != problem.dim)
    throw InvalidConfigError("solve: x0 dimension mismatch");
  if (!all_finite(x0)) throw NonFiniteError("solve: x0 not finite");
  const Vector v0 = v0_opt.value_or(x0);
  if (v0.size() != problem.dim)
    throw InvalidConfigError("solve: v0 dimension mismatch");

  RunResult res;
  res.method = method;
  res.config = config;
  res.x0 = x0;
  res.v0 = v0;
  if (problem.inner_not_converged_count)
    problem.inner_not_converged_count->store(0);

  IterateState state = make_initial_state(method.tag, x0, v0);
  if (config.record_iterates) {
    res.x_history.push_back(x0);
    res.v_history.push_back(v0);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  bool converged = false;
  std::size_t prox_pairs = 0;
  try {
  for (std::size_t it = 1; it <= config.max_iter; ++it) {
    const Vector x_prev = state.x;
    switch (method.tag) {
      case MethodTag::drs_theta:
        state = drs_theta_step(state, problem, config);
        ++prox_pairs;
        break;
      case MethodTag::drs_alpha:
        state = drs_alpha_step(state, problem, config);
        ++prox_pairs;
        break;
      case MethodTag::gdcp:
        state = gdcp_step(state, problem, config);
        ++prox_pairs;
        break;
      case MethodTag::dca: {
        std::size_t inner = 0;
        state = dca_step(state, problem, config, method, &inner);
        prox_pairs += inner;
        break;
      }
      case MethodTag::admm:
        state = admm_step(state, problem, config, method);
        ++prox_pairs;
        break;
    }

    TraceRow row;
    row.n = it;
    const double step = dist2(state.x, x_prev);
    row.err_squared = step * step;
    row.err_relative = step / std::max(1.0, norm2(state.x));
    row.err = err_measure(config.stop, state.x, x_prev);
    if (config.record_objective && problem.objective)
      row.objective = evaluate_objective(problem, state.x);
    row.step_norm = dist2(state.z, state.y);
    row.gap_norm = dist2(state.x, state.v);
    row.time_s = elapsed();
    res.trace.rows.push_back(std::move(row));

    if (config.record_iterates) {
      res.x_history.push_back(state.x);
      res.v_history.push_back(state.v);
    }

    if (res.trace.rows.back().err < config.stop.tol) {
      converged = true;
      break;
    }
  }
  } catch (...) {
    if (partial_on_error) {
      res.x = state.x;
      res.final_state = state;
      res.trace.terminal.total_iterations = res.trace.rows.size();
      res.trace.terminal.total_prox_pairs = prox_pairs;
      res.trace.terminal.total_seconds = elapsed();
      *partial_on_error = std::move(res);
    }
    throw;
  }

  res.x = state.x;
  res.final_state = state;
  res.trace.terminal.converged = converged;
  res.trace.terminal.total_iterations = res.trace.rows.size();
  res.trace.terminal.total_prox_pairs = prox_pairs;
  res.trace.terminal.total_seconds = elapsed();
  if (problem.inner_not_converged_count)
    res.trace.terminal.inner_not_converged =
        problem.inner_not_converged_count->load() > 0;

  if (!res.trace.rows.empty()) {
    // Residual pair matching each method's fixed-point characterization.
    if (method.tag == MethodTag::admm) {
      const auto [r1, r2] = stationarity_residuals(
          state.x, sub(state.z, state.u), problem, 1.0 / method.admm_penalty);
      res.trace.terminal.r1 = r1;
      res.trace.terminal.r2 = r2;
    } else {
      const auto [r1, r2] =
          stationarity_residuals(state.y, state.u, problem, config.beta);
      res.trace.terminal.r1 = r1;
      res.trace.terminal.r2 = r2;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Reference-point estimation and Lyapunov backfill.
//
// At a fixed point, prox_{bf}(u*) = x*, so the last (y, u) pair of a
// converged run estimates (x_bar, y_bar) with x_bar stationary and y_bar in
// the fixed-point set.
// ---------------------------------------------------------------------------

struct ReferencePair {
  Vector x_bar;
  Vector y_bar;
};

inline ReferencePair estimate_reference(const RunResult& result,
                                        const DCProblem& problem,
                                        double beta) {
  (void)problem;
  (void)beta;
  if (!result.trace.terminal.converged)
    throw NotConvergedError("estimate_reference requires a converged run");
  return ReferencePair{result.final_state.y, result.final_state.u};
}

// Monitors from the convergence analysis, computed against a reference
// y_bar. For the theta-averaged method (v_{-1} taken as v_0):
//   c_n = ||x_n-y||^2/(1+t) + t ||v_n-y||^2 + t^2/(1+t)^2 ||x_n - v_{n-1}||^2
// For the alpha-averaged method:
//   a_n = ||x_n-y||^2 + ||v_n-y||^2
// Returns the full sequence (index 0 = starting point) and fills the
// matching trace column. Requires config.record_iterates.
inline std::vector<double> backfill_lyapunov(RunResult& result,
                                             const ReferencePair& ref) {
  if (result.x_history.empty())
    throw InvalidConfigError(
        "backfill_lyapunov requires record_iterates to have been set");
  const Vector& yb = ref.y_bar;
  const bool theta_form = result.method.tag != MethodTag::drs_alpha;
  const double t = result.config.theta;
  std::vector<double> seq;
  seq.reserve(result.x_history.size());
  for (std::size_t n = 0; n < result.x_history.size(); ++n) {
    const Vector& xn = result.x_history[n];
    const Vector& vn = result.v_history[n];
    double value;
    if (theta_form) {
      const Vector& v_prev = result.v_history[n == 0 ? 0 : n - 1];
      const double dx = dist2(xn, yb);
      const double dv = dist2(vn, yb);
      const double dxv = dist2(xn, v_prev);
      value = dx * dx / (1.0 + t) + t * dv * dv +
              (t * t) / ((1.0 + t) * (1.0 + t)) * dxv * dxv;
    } else {
      const double dx = dist2(xn, yb);
      const double dv = dist2(vn, yb);
      value = dx * dx + dv * dv;
    }
    seq.push_back(value);
    if (n >= 1 && n - 1 < result.trace.rows.size()) {
      if (theta_form)
        result.trace.rows[n - 1].lyap_c = value;
      else
        result.trace.rows[n - 1].lyap_a = value;
    }
  }
  return seq;
}

// The alpha-averaged update is an inertial iteration in disguise: with
// v+ = (1-a)v + a x and t = (1-2a)/a, the extrapolated point
// v+ + t (v+ - v) equals the averaged point (1-a)x + a v.
inline Vector inertial_equivalent_u(const Vector& x, const Vector& v,
                                    double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidConfigError("inertial_equivalent_u: alpha must be in (0,1)");
  const Vector v_next = lin_comb(1.0 - alpha, v, alpha, x);
  const double theta = (1.0 - 2.0 * alpha) / alpha;
  Vector r = v_next;
  axpy(theta, sub(v_next, v), r);
  return r;
}

}  // namespace dcsplit
