#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcsplit {

using Vector = std::vector<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrixError : Error {
  using Error::Error;
};
struct NonFiniteError : Error {
  using Error::Error;
};
struct InvalidConfigError : Error {
  using Error::Error;
};
struct NotConvergedError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Seeded random generation.
//
// Engine: std::mt19937_64 (64-bit state, sequence pinned by the standard).
// Gaussian sampling: Box-Muller on top of a fixed uint64 -> (0,1] mapping, so
// the same seed reproduces the same stream bit-for-bit run after run.
// ---------------------------------------------------------------------------

struct RngSeed {
  std::uint64_t value = 0;

  // Independent stream for a sub-purpose (matrix vs vector vs shuffle, ...).
  RngSeed derive(std::uint64_t salt) const {
    std::uint64_t z = value + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RngSeed{z ^ (z >> 31)};
  }
};

class Rng {
 public:
  explicit Rng(RngSeed seed) : gen_(seed.value) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on (0,1]; never returns 0 so log() below is safe.
  double uniform01() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Uniform index in [0, n). Modulo bias is < 2^-53 for any n we use.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % static_cast<std::uint64_t>(n));
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// ---------------------------------------------------------------------------
// Dense row-major matrix.
// ---------------------------------------------------------------------------

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

// ---------------------------------------------------------------------------
// Small vector helpers shared by every solver.
// ---------------------------------------------------------------------------

inline double dot(const Vector& x, const Vector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm2(const Vector& x) { return std::sqrt(dot(x, x)); }

inline double norm_inf(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline Vector sub(const Vector& x, const Vector& y) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

inline Vector add(const Vector& x, const Vector& y) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline Vector scaled(double a, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
  return r;
}

// a*x + b*y
inline Vector lin_comb(double a, const Vector& x, double b, const Vector& y) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

// y += a*x
inline void axpy(double a, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline double dist2(const Vector& x, const Vector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline bool all_finite(const Vector& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

inline bool all_finite(const Matrix& m) {
  for (double v : m.a)
    if (!std::isfinite(v)) return false;
  return true;
}

inline Vector mat_vec(const Matrix& A, const Vector& x) {
  Vector r(A.rows, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    double s = 0.0;
    const double* row = &A.a[i * A.cols];
    for (std::size_t j = 0; j < A.cols; ++j) s += row[j] * x[j];
    r[i] = s;
  }
  return r;
}

// A^T x
inline Vector mat_t_vec(const Matrix& A, const Vector& x) {
  Vector r(A.cols, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double* row = &A.a[i * A.cols];
    for (std::size_t j = 0; j < A.cols; ++j) r[j] += row[j] * x[i];
  }
  return r;
}

inline Matrix transpose(const Matrix& A) {
  Matrix t(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) t(j, i) = A(i, j);
  return t;
}

inline Matrix mat_mul(const Matrix& A, const Matrix& B) {
  Matrix c(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t k = 0; k < A.cols; ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      const double* brow = &B.a[k * B.cols];
      double* crow = &c.a[i * B.cols];
      for (std::size_t j = 0; j < B.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

// A^T A without forming the transpose.
inline Matrix gram(const Matrix& A) {
  Matrix g(A.cols, A.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double* row = &A.a[i * A.cols];
    for (std::size_t j = 0; j < A.cols; ++j) {
      const double aij = row[j];
      if (aij == 0.0) continue;
      for (std::size_t k = j; k < A.cols; ++k) g(j, k) += aij * row[k];
    }
  }
  for (std::size_t j = 0; j < A.cols; ++j)
    for (std::size_t k = 0; k < j; ++k) g(j, k) = g(k, j);
  return g;
}

// ---------------------------------------------------------------------------
// LU factorization with partial pivoting. A pivot below 1e-12 in magnitude is
// treated as rank-deficiency, not ill-conditioning, and raises
// SingularMatrixError.
// ---------------------------------------------------------------------------

inline constexpr double kLuPivotThreshold = 1e-12;

class LuFactorization {
 public:
  static LuFactorization compute(const Matrix& A) {
    if (A.rows != A.cols) throw InvalidConfigError("lu: matrix must be square");
    LuFactorization f;
    f.lu_ = A;
    const std::size_t n = A.rows;
    f.perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(f.lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double v = std::abs(f.lu_(i, k));
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (best <= kLuPivotThreshold)
        throw SingularMatrixError("lu: pivot " + std::to_string(best) +
                                  " below threshold at column " +
                                  std::to_string(k));
      if (p != k) {
        std::swap(f.perm_[p], f.perm_[k]);
        for (std::size_t j = 0; j < n; ++j)
          std::swap(f.lu_(p, j), f.lu_(k, j));
      }
      const double pivot = f.lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const double m = f.lu_(i, k) / pivot;
        f.lu_(i, k) = m;
        if (m == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) f.lu_(i, j) -= m * f.lu_(k, j);
      }
    }
    return f;
  }

  Vector solve(const Vector& b) const {
    const std::size_t n = lu_.rows;
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
      y[i] = s;
    }
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= lu_(ii, j) * x[j];
      x[ii] = s / lu_(ii, ii);
    }
    return x;
  }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

inline Vector lu_solve(const Matrix& A, const Vector& b) {
  return LuFactorization::compute(A).solve(b);
}

// Q+ = (Q^T Q)^-1 Q^T, the formula the reference experiments use for
// rectangular systems. Requires full column rank.
inline Matrix pseudo_inverse(const Matrix& Q) {
  const LuFactorization f = LuFactorization::compute(gram(Q));
  const Matrix qt = transpose(Q);
  Matrix p(Q.cols, Q.rows);
  Vector col(Q.cols);
  for (std::size_t j = 0; j < Q.rows; ++j) {
    for (std::size_t i = 0; i < Q.cols; ++i) col[i] = qt(i, j);
    const Vector x = f.solve(col);
    for (std::size_t i = 0; i < Q.cols; ++i) p(i, j) = x[i];
  }
  return p;
}

// ---------------------------------------------------------------------------
// Conjugate gradient on a symmetric positive-definite linear map.
// ---------------------------------------------------------------------------

struct CgResult {
  Vector x;
  bool converged = false;
  std::size_t iterations = 0;
};

inline CgResult conjugate_gradient(
    const std::function<Vector(const Vector&)>& apply_A, const Vector& b,
    double tol, std::size_t max_iter) {
  CgResult res;
  res.x.assign(b.size(), 0.0);
  Vector r = b;
  Vector p = r;
  double rs = dot(r, r);
  const double bnorm = norm2(b);
  const double target = tol * (bnorm > 0 ? bnorm : 1.0);
  if (std::sqrt(rs) <= target) {
    res.converged = true;
    return res;
  }
  for (std::size_t it = 0; it < max_iter; ++it) {
    const Vector ap = apply_A(p);
    const double denom = dot(p, ap);
    if (denom <= 0.0) break;  // map not SPD along p; return best iterate
    const double alpha = rs / denom;
    axpy(alpha, p, res.x);
    axpy(-alpha, ap, r);
    const double rs_new = dot(r, r);
    res.iterations = it + 1;
    if (std::sqrt(rs_new) <= target) {
      res.converged = true;
      return res;
    }
    p = lin_comb(1.0, r, rs_new / rs, p);
    rs = rs_new;
  }
  // Recurrence residual can drift; trust an explicit final check.
  res.converged = norm2(sub(apply_A(res.x), b)) <= target;
  return res;
}

// ---------------------------------------------------------------------------
// Seeded Gaussian matrices and vectors (row-major fill order is part of the
// reproducibility contract).
// ---------------------------------------------------------------------------

inline Matrix gaussian_matrix(std::size_t rows, std::size_t cols, RngSeed seed,
                              bool normalize_columns = false) {
  if (rows < 1 || cols < 1)
    throw InvalidConfigError("gaussian_matrix: rows and cols must be >= 1");
  Matrix m(rows, cols);
  Rng rng(seed);
  for (double& v : m.a) v = rng.normal();
  if (normalize_columns) {
    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows; ++i) s += m(i, j) * m(i, j);
      const double nrm = std::sqrt(s);
      if (nrm > 0.0)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) /= nrm;
    }
  }
  return m;
}

inline Vector gaussian_vector(std::size_t n, RngSeed seed) {
  Vector v(n);
  Rng rng(seed);
  for (double& x : v) x = rng.normal();
  return v;
}

}  // namespace dcsplit
