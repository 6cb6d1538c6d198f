#include "dcsplit/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace dcsplit;

TEST(Accuracy, Basics) {
  EXPECT_DOUBLE_EQ(accuracy({1, -1, 1}, {1, -1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(accuracy({1, -1, 1}, {-1, 1, -1}), 0.0);
  EXPECT_DOUBLE_EQ(accuracy({1, 1, -1, -1}, {1, 1, -1, 1}), 0.75);
  EXPECT_THROW(accuracy({}, {}), EmptyInputError);
  EXPECT_THROW(accuracy({1}, {1, 1}), EmptyInputError);
}

TEST(Precision, BasicsAndDegenerateConvention) {
  EXPECT_DOUBLE_EQ(precision({1, 1}, {1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(precision({1, -1}, {1, 1}), 0.5);
  bool degenerate = false;
  EXPECT_DOUBLE_EQ(precision({1, -1}, {-1, -1}, &degenerate), 1.0);
  EXPECT_TRUE(degenerate);
  EXPECT_DOUBLE_EQ(precision({1, -1}, {1, -1}, &degenerate), 1.0);
  EXPECT_FALSE(degenerate);
}

TEST(ErrorScores, ZeroOnIdenticalVectors) {
  const std::vector<int> y = {1, -1, 1, -1};
  EXPECT_DOUBLE_EQ(mae(y, y), 0.0);
  EXPECT_DOUBLE_EQ(mse(y, y), 0.0);
  EXPECT_DOUBLE_EQ(rmse(y, y), 0.0);
}

// Reference row frozen from a 138-point test set: accuracy 0.9348 (9
// misses) gives mae 0.1304, mse 0.2609, rmse 0.5108 after rounding.
TEST(ErrorScores, ReproducesReferenceRow) {
  std::vector<int> y_true(138, 1), y_pred(138, 1);
  for (int i = 0; i < 9; ++i) y_pred[i] = -1;
  const double acc = accuracy(y_true, y_pred);
  const double m1 = mae(y_true, y_pred);
  const double m2 = mse(y_true, y_pred);
  const double r = rmse(y_true, y_pred);
  EXPECT_NEAR(acc, 0.9348, 5e-5);
  EXPECT_NEAR(m1, 0.1304, 5e-5);
  EXPECT_NEAR(m2, 0.2609, 5e-5);
  EXPECT_NEAR(r, 0.5108, 5e-5);
  EXPECT_NEAR(m1, 2.0 * (1.0 - acc), 1e-12);
  EXPECT_NEAR(m2, 2.0 * m1, 1e-12);
  EXPECT_NEAR(r, std::sqrt(m2), 1e-12);
}

TEST(ErrorScores, PlusMinusOneIdentities) {
  Rng rng(RngSeed{9});
  for (int k = 0; k < 100; ++k) {
    std::vector<int> t(37), p(37);
    for (int& v : t) v = rng.uniform01() < 0.5 ? -1 : 1;
    for (int& v : p) v = rng.uniform01() < 0.5 ? -1 : 1;
    const double acc = accuracy(t, p);
    const double m1 = mae(t, p);
    const double m2 = mse(t, p);
    EXPECT_NEAR(m1, 2.0 * (1.0 - acc), 1e-12);
    EXPECT_NEAR(m2, 2.0 * m1, 1e-12);
    EXPECT_NEAR(rmse(t, p), std::sqrt(m2), 1e-12);
  }
}

TEST(Metrics, PermutationInvariant) {
  std::vector<int> t = {1, 1, -1, -1, 1, -1, 1, 1};
  std::vector<int> p = {1, -1, -1, 1, 1, -1, -1, 1};
  const double a0 = accuracy(t, p);
  const double p0 = precision(t, p);
  const double m0 = mae(t, p);
  std::vector<std::size_t> idx(t.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(RngSeed{31});
  for (int k = 0; k < 20; ++k) {
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      std::swap(idx[i], idx[i + rng.uniform_index(idx.size() - i)]);
    std::vector<int> ts(t.size()), ps(t.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ts[i] = t[idx[i]];
      ps[i] = p[idx[i]];
    }
    EXPECT_DOUBLE_EQ(accuracy(ts, ps), a0);
    EXPECT_DOUBLE_EQ(precision(ts, ps), p0);
    EXPECT_DOUBLE_EQ(mae(ts, ps), m0);
  }
}
