#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "renyi/errors.hpp"
#include "renyi/prob_vec.hpp"

namespace renyi {

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const EntropyError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected EntropyError";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(ProbVec, StrictAcceptsNormalized) {
  const auto p = make_prob_vec({0.5, 0.25, 0.25});
  EXPECT_EQ(p.size(), 3u);
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  const auto certain = make_prob_vec({1.0});
  EXPECT_EQ(certain.size(), 1u);
}

TEST(ProbVec, RenormalizeScalesBySum) {
  const auto p = make_prob_vec({2, 1, 1}, NormalizeMode::Renormalize);
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.25);
  EXPECT_DOUBLE_EQ(p[2], 0.25);
}

TEST(ProbVec, RenormalizeClampsSignNoise) {
  const auto p = make_prob_vec({0.5, -1e-15, 0.5}, NormalizeMode::Renormalize);
  EXPECT_EQ(p[1], 0.0);
}

TEST(ProbVec, KeepsUserOrder) {
  const auto p = make_prob_vec({0.1, 0.7, 0.2});
  EXPECT_DOUBLE_EQ(p[1], 0.7);
}

TEST(ProbVec, Errors) {
  EXPECT_EQ(code_of([] { make_prob_vec({0.5, -0.1, 0.6}); }),
            ErrorCode::NegativeComponent);
  EXPECT_EQ(code_of([] { make_prob_vec({0.5, 0.4}); }), ErrorCode::NotNormalized);
  EXPECT_EQ(code_of([] { make_prob_vec({0.0, 0.0}, NormalizeMode::Renormalize); }),
            ErrorCode::ZeroSum);
  EXPECT_EQ(code_of([] { make_prob_vec({}); }), ErrorCode::EmptyVector);
  // Within neg_tol but still negative is rejected in strict mode.
  EXPECT_EQ(code_of([] { make_prob_vec({1.0, -1e-15}); }),
            ErrorCode::NegativeComponent);
}

TEST(ProbVec, StrictToleranceBoundary) {
  EXPECT_NO_THROW(make_prob_vec({0.5, 0.5 + 5e-13}));
  EXPECT_THROW(make_prob_vec({0.5, 0.5 + 5e-12}), EntropyError);
}

TEST(FlatK, Examples) {
  const auto q1 = flat_k(1, 3);
  EXPECT_EQ(q1[0], 1.0);
  EXPECT_EQ(q1[1], 0.0);
  const auto q3 = flat_k(3, 3);
  for (double x : q3) EXPECT_DOUBLE_EQ(x, 1.0 / 3.0);
  const auto q2 = flat_k(2, 4);
  EXPECT_EQ(q2[0], 0.5);
  EXPECT_EQ(q2[1], 0.5);
  EXPECT_EQ(q2[2], 0.0);
  EXPECT_EQ(q2[3], 0.0);
}

TEST(FlatK, SupportAndNormalization) {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto p = flat_k(k, n);
      EXPECT_EQ(p.support_size(), static_cast<std::size_t>(k));
      const double sum = std::accumulate(p.begin(), p.end(), 0.0);
      EXPECT_NEAR(sum, 1.0, kNormTol);
    }
  }
}

TEST(FlatK, BadK) {
  EXPECT_EQ(code_of([] { flat_k(0, 3); }), ErrorCode::BadK);
  EXPECT_EQ(code_of([] { flat_k(4, 3); }), ErrorCode::BadK);
}

TEST(RenyiOrder, Classification) {
  EXPECT_EQ(RenyiOrder::of(0.0).kind(), RenyiOrder::Kind::Zero);
  EXPECT_EQ(RenyiOrder::of(1.0 + 5e-10).kind(), RenyiOrder::Kind::One);
  EXPECT_EQ(RenyiOrder::of(1.0 + 1e-6).kind(), RenyiOrder::Kind::General);
  EXPECT_EQ(RenyiOrder::of(INFINITY).kind(), RenyiOrder::Kind::Infinity);
  EXPECT_EQ(code_of([] { RenyiOrder::of(-0.5); }), ErrorCode::NegativeOrder);
}

}  // namespace renyi
