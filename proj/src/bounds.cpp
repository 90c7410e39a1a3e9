#include "renyi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "renyi/errors.hpp"
#include "renyi/interp_family.hpp"

namespace renyi {

const char* to_string(Side side) noexcept {
  return side == Side::Lower ? "lower" : "upper";
}

const char* to_string(Rigor rigor) noexcept {
  return rigor == Rigor::Rigorous ? "rigorous" : "heuristic";
}

namespace {

BoundResult rigorous(double value, Side side, std::string source) {
  return {value, side, Rigor::Rigorous, std::move(source)};
}

BoundPair flat_pair(double value, const std::string& tag) {
  return {rigorous(value, Side::Lower, "ht-lower-" + tag),
          rigorous(value, Side::Upper, "ht-upper-" + tag)};
}

// Evaluates H_q on both boundary families and orders the pair.
BoundPair evaluate_families(int n, double a_top, ArcIndex arc, double a_bottom,
                            RenyiOrder q, const std::string& tag) {
  const double upper = interp_renyi(InterpDist(1, n, a_top), q).nats;
  const double lower =
      interp_renyi(InterpDist(arc.k - 1, arc.k, a_bottom), q).nats;
  return {rigorous(std::min(lower, upper), Side::Lower, "ht-lower-" + tag),
          rigorous(upper, Side::Upper, "ht-upper-" + tag)};
}

RenyiOrder checked_target_order(double q, double s_max) {
  if (!(q > 0.0 && q < s_max)) {
    throw EntropyError(ErrorCode::OrderOutsideValidity,
                       "bound from H_" + std::to_string(s_max) +
                           " requires 0 < q < " + std::to_string(s_max) +
                           ", got q = " + std::to_string(q));
  }
  return RenyiOrder::of(q);
}

// Weight a in [0, 1] with entropy(a) = target for a non-increasing entropy.
double bisect_weight(const std::function<double(double)>& entropy,
                     double target) {
  if (target >= entropy(0.0)) return 0.0;
  if (target <= entropy(1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (entropy(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BoundResult monotonicity_bound(double h_s, double q, double s) {
  if (std::isnan(q) || std::isnan(s) || q < 0.0 || s < 0.0) {
    throw EntropyError(ErrorCode::NegativeOrder, "orders must be >= 0");
  }
  if (q == s) {
    throw EntropyError(ErrorCode::EqualOrders,
                       "monotonicity bound needs distinct orders");
  }
  if (!std::isfinite(h_s) || h_s < 0.0) {
    throw EntropyError(ErrorCode::OutOfRange, "entropy must be >= 0");
  }
  return rigorous(h_s, s > q ? Side::Lower : Side::Upper, "renyi-monotonicity");
}

BoundResult ht_simple_upper(double h2, int n) {
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
  h2 = detail::checked_entropy(h2, n, "H2");
  const double nn = n;
  return rigorous(std::log(nn) + 1.0 / nn - std::exp(-h2), Side::Upper,
                  "ht-simple-upper");
}

BoundPair renyi_bounds_from_H2(double h2, int n, double q) {
  const auto order = checked_target_order(q, 2.0);
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
  h2 = detail::checked_entropy(h2, n, "H2");
  if (n == 1) return flat_pair(0.0, "s2");
  const double a_top = invert_a_from_H2_top(h2, n);
  const ArcIndex arc = select_arc(h2, n);
  const double a_bottom = invert_a_from_H2_bottom(h2, arc);
  return evaluate_families(n, a_top, arc, a_bottom, order, "s2");
}

BoundPair renyi_bounds_from_H3(double h3, int n, double q) {
  const auto order = checked_target_order(q, 3.0);
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
  h3 = detail::checked_entropy(h3, n, "H3");
  if (n == 1) return flat_pair(0.0, "s3");
  const double a_top = invert_a_from_H3_top(h3, n);
  const ArcIndex arc = select_arc(h3, n);
  const double a_bottom = invert_a_from_H3_bottom(h3, arc);
  return evaluate_families(n, a_top, arc, a_bottom, order, "s3");
}

BoundPair shannon_bounds_from_H2(double h2, int n) {
  return renyi_bounds_from_H2(h2, n, 1.0);
}

BoundPair shannon_bounds_from_H3(double h3, int n) {
  return renyi_bounds_from_H3(h3, n, 1.0);
}

BoundPair ht_general_bounds(double h_s, double s, double q, int n) {
  if (std::isnan(q) || std::isnan(s) || q < 0.0 || s < 0.0) {
    throw EntropyError(ErrorCode::NegativeOrder, "orders must be >= 0");
  }
  if (q == s) {
    throw EntropyError(ErrorCode::EqualOrders, "bounds need distinct orders");
  }
  if (!(s > q) || !(q > 0.0)) {
    throw EntropyError(ErrorCode::OrderOutsideValidity,
                       "general bounds require s > q > 0");
  }
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
  h_s = detail::checked_entropy(h_s, n, "H_s");
  if (n == 1) return flat_pair(0.0, "general");

  const auto known = RenyiOrder::of(s);
  const auto wanted = RenyiOrder::of(q);
  const double a_top = bisect_weight(
      [&](double a) { return interp_renyi(InterpDist(1, n, a), known).nats; },
      h_s);
  const ArcIndex arc = select_arc(h_s, n);
  const double a_bottom = bisect_weight(
      [&](double a) {
        return interp_renyi(InterpDist(arc.k - 1, arc.k, a), known).nats;
      },
      h_s);
  return evaluate_families(n, a_top, arc, a_bottom, wanted, "general");
}

DominanceReport check_order_dominance(double h2, double h3, int n,
                                      double tol) {
  const auto b2 = shannon_bounds_from_H2(h2, n);
  const auto b3 = shannon_bounds_from_H3(h3, n);
  const double up = b2.upper.value - b3.upper.value;
  const double lo = b3.lower.value - b2.lower.value;
  return {up <= tol, lo <= tol, up, lo};
}

}  // namespace renyi
