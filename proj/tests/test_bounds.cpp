#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "generators.hpp"
#include "oracles.hpp"
#include "renyi/bounds.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/interp_family.hpp"

namespace renyi {

namespace {

const double kH2 = std::log(8.0 / 3.0);
const double kH3 = 0.5 * std::log(32.0 / 5.0);

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

TEST(Monotonicity, Sides) {
  const auto b = monotonicity_bound(kH2, 1.0, 2.0);
  EXPECT_EQ(b.side, Side::Lower);
  EXPECT_EQ(b.value, kH2);
  EXPECT_LE(b.value, oracle::kWorkedH1);
  EXPECT_EQ(b.rigor, Rigor::Rigorous);
  EXPECT_EQ(monotonicity_bound(0.7, 2.0, INFINITY).side, Side::Lower);
  EXPECT_EQ(monotonicity_bound(0.7, 3.0, 2.0).side, Side::Upper);
  EXPECT_EQ(code_of([] { monotonicity_bound(0.5, 2.0, 2.0); }), ErrorCode::EqualOrders);
}

TEST(SimpleUpper, Examples) {
  EXPECT_NEAR(ht_simple_upper(kH2, 3).value, oracle::kSimpleUpper, 1e-15);
  EXPECT_NEAR(ht_simple_upper(std::log(5.0), 5).value, std::log(5.0), 1e-15);
  EXPECT_NEAR(ht_simple_upper(0.0, 2).value, std::log(2.0) - 0.5, 1e-15);
  EXPECT_EQ(code_of([] { ht_simple_upper(2.0, 3); }), ErrorCode::OutOfRange);
}

TEST(ShannonFromH2, WorkedVector) {
  const auto b = shannon_bounds_from_H2(kH2, 3);
  EXPECT_NEAR(b.upper.value, oracle::kWorkedH1, 1e-14);
  EXPECT_NEAR(b.lower.value, oracle::kLowerH1FromH2, 1e-14);
  EXPECT_EQ(b.lower.side, Side::Lower);
  EXPECT_EQ(b.upper.side, Side::Upper);
  EXPECT_EQ(b.lower.rigor, Rigor::Rigorous);
  EXPECT_EQ(b.upper.source, "ht-upper-s2");
}

TEST(ShannonFromH2, Endpoints) {
  for (int n = 1; n <= 20; ++n) {
    const auto top = shannon_bounds_from_H2(std::log(n), n);
    EXPECT_NEAR(top.lower.value, std::log(n), 1e-12);
    EXPECT_NEAR(top.upper.value, std::log(n), 1e-12);
    const auto bottom = shannon_bounds_from_H2(0.0, n);
    EXPECT_NEAR(bottom.lower.value, 0.0, 1e-13);
    EXPECT_NEAR(bottom.upper.value, 0.0, 1e-13);
  }
}

TEST(ShannonFromH3, WorkedVector) {
  const auto b = shannon_bounds_from_H3(kH3, 3);
  EXPECT_NEAR(b.upper.value, oracle::kWorkedH1, 1e-13);
  EXPECT_NEAR(b.lower.value, oracle::kLowerH1FromH3, 1e-13);
  for (int n = 1; n <= 20; ++n) {
    const auto top = shannon_bounds_from_H3(std::log(n), n);
    EXPECT_NEAR(top.lower.value, std::log(n), 1e-12);
    EXPECT_NEAR(top.upper.value, std::log(n), 1e-12);
    const auto bottom = shannon_bounds_from_H3(0.0, n);
    EXPECT_NEAR(bottom.lower.value, 0.0, 1e-12);
    EXPECT_NEAR(bottom.upper.value, 0.0, 1e-12);
  }
}

TEST(RenyiFromH2, HalfOrderWorkedVector) {
  const auto b = renyi_bounds_from_H2(kH2, 3, 0.5);
  EXPECT_NEAR(b.upper.value, oracle::kWorkedHalf, 1e-13);
  EXPECT_NEAR(b.lower.value, oracle::kLowerHalfFromH2, 1e-13);
}

TEST(RenyiFromH2, ShannonLimitContinuity) {
  gen::VectorGen g(21);
  for (int t = 0; t < 100; ++t) {
    const int n = g.length(2, 20);
    const double h2 = renyi(g(n), 2.0).nats;
    const auto s = shannon_bounds_from_H2(h2, n);
    for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
      const auto b = renyi_bounds_from_H2(h2, n, q);
      EXPECT_NEAR(b.upper.value, s.upper.value, 1e-5);
      EXPECT_NEAR(b.lower.value, s.lower.value, 1e-5);
    }
  }
}

TEST(RenyiFromH2, ValidityWindow) {
  EXPECT_EQ(code_of([] { renyi_bounds_from_H2(0.5, 3, 2.0); }),
            ErrorCode::OrderOutsideValidity);
  EXPECT_EQ(code_of([] { renyi_bounds_from_H2(0.5, 3, 0.0); }),
            ErrorCode::OrderOutsideValidity);
  EXPECT_EQ(code_of([] { renyi_bounds_from_H3(0.5, 3, 3.5); }),
            ErrorCode::OrderOutsideValidity);
  for (double q : {0.1, 0.7, 1.5, 1.99}) {
    const auto b = renyi_bounds_from_H2(std::log(4.0), 4, q);
    EXPECT_NEAR(b.lower.value, std::log(4.0), 1e-12);
    EXPECT_NEAR(b.upper.value, std::log(4.0), 1e-12);
  }
}

TEST(GeneralBounds, MatchesClosedForms) {
  gen::VectorGen g(22);
  for (int t = 0; t < 100; ++t) {
    const int n = g.length(2, 20);
    const auto p = g(n);
    const double h2 = renyi(p, 2.0).nats;
    const double h3 = renyi(p, 3.0).nats;
    const auto c2 = shannon_bounds_from_H2(h2, n);
    const auto g2 = ht_general_bounds(h2, 2.0, 1.0, n);
    EXPECT_NEAR(g2.lower.value, c2.lower.value, 1e-9);
    EXPECT_NEAR(g2.upper.value, c2.upper.value, 1e-9);
    const auto c3 = shannon_bounds_from_H3(h3, n);
    const auto g3 = ht_general_bounds(h3, 3.0, 1.0, n);
    EXPECT_NEAR(g3.lower.value, c3.lower.value, 1e-9);
    EXPECT_NEAR(g3.upper.value, c3.upper.value, 1e-9);
  }
}

TEST(GeneralBounds, LatticePointsAndOrders) {
  for (int k = 1; k <= 8; ++k) {
    const auto b = ht_general_bounds(std::log(k), 4.0, 1.0, 8);
    EXPECT_NEAR(b.lower.value, std::log(k), 1e-12);
    EXPECT_GE(b.upper.value, b.lower.value);
  }
  EXPECT_EQ(code_of([] { ht_general_bounds(0.5, 2.0, 2.0, 3); }), ErrorCode::EqualOrders);
  EXPECT_EQ(code_of([] { ht_general_bounds(0.5, 1.0, 2.0, 3); }),
            ErrorCode::OrderOutsideValidity);
}

TEST(GeneralBounds, SandwichFromFourthOrder) {
  gen::VectorGen g(23);
  for (int t = 0; t < 1000; ++t) {
    const auto p = g(5);
    const double h1 = shannon(p).nats;
    const auto b = ht_general_bounds(renyi(p, 4.0).nats, 4.0, 1.0, 5);
    EXPECT_LE(b.lower.value, h1 + 1e-9);
    EXPECT_GE(b.upper.value, h1 - 1e-9);
  }
}

TEST(Bounds, SandwichAndTightness) {
  gen::VectorGen g(24);
  for (int t = 0; t < 3000; ++t) {
    const int n = g.length(1, 20);
    const auto p = g(n);
    const double h1 = shannon(p).nats;
    const double h2 = renyi(p, 2.0).nats;
    const double h3 = renyi(p, 3.0).nats;
    const auto b2 = shannon_bounds_from_H2(h2, n);
    const auto b3 = shannon_bounds_from_H3(h3, n);
    EXPECT_LE(b2.lower.value, h1 + 1e-9);
    EXPECT_GE(b2.upper.value, h1 - 1e-9);
    EXPECT_LE(b3.lower.value, h1 + 1e-9);
    EXPECT_GE(b3.upper.value, h1 - 1e-9);
    EXPECT_GE(ht_simple_upper(h2, n).value, h1 - 1e-9);
  }
  // Equality on the boundary families themselves.
  for (int n = 2; n <= 12; ++n) {
    for (int i = 0; i <= 10; ++i) {
      const InterpDist top(1, n, i / 10.0);
      const double h1 = interp_renyi(top, RenyiOrder::shannon()).nats;
      EXPECT_NEAR(shannon_bounds_from_H2(interp_renyi(top, RenyiOrder::of(2)).nats, n)
                      .upper.value,
                  h1, 1e-10);
      EXPECT_NEAR(shannon_bounds_from_H3(interp_renyi(top, RenyiOrder::of(3)).nats, n)
                      .upper.value,
                  h1, 1e-10);
      const InterpDist bottom(n - 1, n, i / 10.0);
      const double hb = interp_renyi(bottom, RenyiOrder::shannon()).nats;
      EXPECT_NEAR(shannon_bounds_from_H2(interp_renyi(bottom, RenyiOrder::of(2)).nats, n)
                      .lower.value,
                  hb, 1e-10);
      EXPECT_NEAR(shannon_bounds_from_H3(interp_renyi(bottom, RenyiOrder::of(3)).nats, n)
                      .lower.value,
                  hb, 1e-10);
    }
  }
}

TEST(Bounds, DominanceIsReportedNotEnforced) {
  const auto r = check_order_dominance(kH2, kH3, 3);
  EXPECT_TRUE(r.upper_ok);
  EXPECT_TRUE(r.lower_ok);
  EXPECT_NEAR(r.upper_excess, 0.0, 1e-12);
}

}  // namespace renyi
