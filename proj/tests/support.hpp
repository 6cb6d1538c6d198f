#pragma once

// Shared fixtures and independent oracles for the test binaries. Everything
// here deliberately avoids the library's own solution paths: perturbation
// search, finite differences, and grid search act as ground truth.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dcsplit/core.hpp"
#include "dcsplit/linalg.hpp"
#include "dcsplit/problems.hpp"
#include "dcsplit/prox.hpp"

namespace testsupport {

using namespace dcsplit;

inline Matrix random_spd(std::size_t n, RngSeed seed, double ridge = 1.0) {
  const Matrix g = gaussian_matrix(n, n, seed);
  Matrix q = gram(g);
  for (double& v : q.a) v /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) += ridge;
  return q;
}

inline double fd_central(const std::function<double(double)>& f, double t,
                         double h = 1e-6) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

// True iff F(out) <= F(out + delta) + slack for `count` random perturbations
// of exact euclidean magnitude `magnitude`.
inline bool beats_perturbations(const std::function<double(const Vector&)>& F,
                                const Vector& out, std::size_t count,
                                double magnitude, double slack, RngSeed seed) {
  Rng rng(seed);
  const double f0 = F(out);
  Vector p(out.size());
  for (std::size_t k = 0; k < count; ++k) {
    for (double& v : p) v = rng.normal();
    const double nrm = norm2(p);
    if (nrm == 0.0) continue;
    Vector cand = out;
    axpy(magnitude / nrm, p, cand);
    if (F(cand) < f0 - slack) return false;
  }
  return true;
}

// Replaces every cell under a header containing "time" with a fixed token,
// so byte comparisons ignore wall-clock noise.
inline std::string mask_time_columns(const std::string& csv) {
  std::vector<std::string> lines;
  std::string line;
  std::stringstream ss(csv);
  while (std::getline(ss, line)) lines.push_back(line);
  if (lines.empty()) return csv;

  const auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream cs(s);
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    return cells;
  };
  const std::vector<std::string> header = split(lines[0]);
  std::vector<std::size_t> masked;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j].find("time") != std::string::npos) masked.push_back(j);

  std::string out = lines[0] + "\n";
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = split(lines[i]);
    for (std::size_t j : masked)
      if (j < cells.size()) cells[j] = "<time>";
    for (std::size_t j = 0; j < cells.size(); ++j) {
      out += cells[j];
      out += j + 1 < cells.size() ? "," : "";
    }
    out += "\n";
  }
  return out;
}

// DC instance on which the convergence analysis' hypotheses demonstrably
// hold: f = 1/2 x^T Q x + c^T x with Q SPD (lambda_min >= 1, so rho_f = 1),
// g = 1/2 ||x||^2 (rho_g = 1), h = Huber(0.5) (L = 1); 2 rho = 2 > 1 = L.
struct StronglyConvexInstance {
  DCProblem problem;
  QuadraticFn f;
  QuadraticFn g;
  HuberFn h;
};

inline StronglyConvexInstance strongly_convex_instance(std::size_t n,
                                                       RngSeed seed) {
  StronglyConvexInstance inst;
  inst.f.Q = random_spd(n, seed.derive(1), 1.0);
  inst.f.c = gaussian_vector(n, seed.derive(2));
  inst.g.Q = Matrix::identity(n);
  inst.g.c = Vector(n, 0.0);
  inst.h = HuberFn{0.5};

  const QuadraticFn f = inst.f;
  const QuadraticFn g = inst.g;
  const HuberFn h = inst.h;
  inst.problem.dim = n;
  inst.problem.prox_f = [f](double beta, const Vector& x) {
    return prox_quadratic(f, beta, x);
  };
  inst.problem.prox_g = [g](double beta, const Vector& x) {
    return prox_quadratic(g, beta, x);
  };
  inst.problem.grad_h = [h](const Vector& x) { return grad_huber(x, h); };
  inst.problem.objective = [f, g, h](const Vector& x) {
    return quadratic_value(f, x) + quadratic_value(g, x) - huber_value(x, h);
  };
  inst.problem.strong_convexity_rho = 1.0;
  inst.problem.lipschitz_L = 1.0;
  return inst;
}

}  // namespace testsupport
