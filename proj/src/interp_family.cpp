#include "renyi/interp_family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "renyi/cubic.hpp"
#include "renyi/errors.hpp"

namespace renyi {

namespace detail {

double checked_entropy(double h, int n, const char* what) {
  const double ln_n = std::log(static_cast<double>(n));
  if (!std::isfinite(h) || h < -kEntropyClampTol || h > ln_n + kEntropyClampTol) {
    throw EntropyError(ErrorCode::OutOfRange,
                       std::string(what) + " = " + std::to_string(h) +
                           " outside [0, ln " + std::to_string(n) + "]");
  }
  return std::clamp(h, 0.0, ln_n);
}

double clamp_weight(double a, const char* what) {
  if (!std::isfinite(a) || a < -kWeightClampTol || a > 1.0 + kWeightClampTol) {
    throw EntropyError(ErrorCode::OutOfRange,
                       std::string(what) + ": mixing weight " +
                           std::to_string(a) + " outside [0, 1]");
  }
  return std::clamp(a, 0.0, 1.0);
}

}  // namespace detail

namespace {

// sqrt of a squared weight that may be a rounding-level negative.
double weight_from_square(double a2, const char* what) {
  if (a2 < 0.0) {
    detail::clamp_weight(-std::sqrt(-a2), what);
    return 0.0;
  }
  return detail::clamp_weight(std::sqrt(a2), what);
}

// The requested entropy must lie on the arc between Q_{k-1} and Q_k.
double checked_on_arc(double h, ArcIndex arc, const char* what) {
  const double lo = std::log(static_cast<double>(arc.k - 1));
  const double hi = std::log(static_cast<double>(arc.k));
  if (!std::isfinite(h) || h < lo - kEntropyClampTol || h > hi + kEntropyClampTol) {
    throw EntropyError(ErrorCode::OutOfRange,
                       std::string(what) + " = " + std::to_string(h) +
                           " not on arc k = " + std::to_string(arc.k));
  }
  return std::clamp(h, lo, hi);
}

}  // namespace

InterpDist::InterpDist(int k, int l, double a) : k_(k), l_(l), a_(a) {
  if (k < 1 || l <= k) {
    throw EntropyError(ErrorCode::BadInterp,
                       "interpolating family needs 1 <= k < l, got k=" +
                           std::to_string(k) + " l=" + std::to_string(l));
  }
  if (!std::isfinite(a) || a < -1e-12 || a > 1.0 + 1e-12) {
    throw EntropyError(ErrorCode::BadInterp,
                       "mixing weight " + std::to_string(a) + " outside [0, 1]");
  }
  a_ = std::clamp(a, 0.0, 1.0);
}

ArcIndex::ArcIndex(int value) : k(value) {
  if (value < 2) {
    throw EntropyError(ErrorCode::OutOfRange,
                       "arc index must be >= 2, got " + std::to_string(value));
  }
}

ProbVec interp_vector(const InterpDist& d) {
  std::vector<double> v(static_cast<std::size_t>(d.l()), d.low_level());
  std::fill_n(v.begin(), d.k(), d.high_level());
  return ProbVec::make(std::move(v), NormalizeMode::Renormalize);
}

EntropyValue interp_renyi(const InterpDist& d, RenyiOrder q) {
  const std::array<detail::Level, 2> levels{{
      {d.high_level(), static_cast<double>(d.k())},
      {d.low_level(), static_cast<double>(d.l() - d.k())},
  }};
  return {detail::renyi_of_levels(levels, q), q};
}

ArcIndex select_arc(double entropy, int n) {
  if (n < 2) {
    throw EntropyError(ErrorCode::OutOfRange,
                       "arc selection needs N >= 2, got " + std::to_string(n));
  }
  const double ln_n = std::log(static_cast<double>(n));
  if (!std::isfinite(entropy) || entropy < -kArcTieTol ||
      entropy > ln_n + kArcTieTol) {
    throw EntropyError(ErrorCode::OutOfRange,
                       "entropy " + std::to_string(entropy) +
                           " outside [0, ln N] for N = " + std::to_string(n));
  }
  // exp(H) estimates the arc; step down then up to settle rounding.
  int k = std::clamp(static_cast<int>(std::floor(std::exp(entropy))), 2, n);
  while (k > 2 && entropy <= std::log(static_cast<double>(k - 1)) + kArcTieTol) {
    --k;
  }
  while (k < n && entropy > std::log(static_cast<double>(k)) + kArcTieTol) {
    ++k;
  }
  return ArcIndex(k);
}

double invert_a_from_H2_top(double h2, int n) {
  if (n < 2) {
    throw EntropyError(ErrorCode::OutOfRange, "Q_{1,N} needs N >= 2");
  }
  h2 = detail::checked_entropy(h2, n, "H2");
  const double gap = std::log(static_cast<double>(n)) - h2;
  return weight_from_square(std::expm1(gap) / (n - 1), "H2 upper inversion");
}

double invert_a_from_H2_bottom(double h2, ArcIndex arc) {
  h2 = checked_on_arc(h2, arc, "H2");
  const double gap = std::log(static_cast<double>(arc.k)) - h2;
  return weight_from_square((arc.k - 1) * std::expm1(gap),
                            "H2 lower inversion");
}

double invert_a_from_H3_top(double h3, int n) {
  if (n < 2) {
    throw EntropyError(ErrorCode::OutOfRange, "Q_{1,N} needs N >= 2");
  }
  h3 = detail::checked_entropy(h3, n, "H3");
  const double gap = std::log(static_cast<double>(n)) - h3;
  if (n == 2) {
    return weight_from_square(std::expm1(2.0 * gap) / 3.0,
                              "H3 upper inversion");
  }
  const double nn = n;
  const MonicCubic w{3.0 / (nn - 2.0), 0.0,
                     -std::expm1(2.0 * gap) / ((nn - 1.0) * (nn - 2.0))};
  return detail::clamp_weight(
      solve_cubic_in_unit_interval(w, RootSelector::Largest),
      "H3 upper inversion");
}

double invert_a_from_H3_bottom(double h3, ArcIndex arc) {
  h3 = checked_on_arc(h3, arc, "H3");
  const double k = arc.k;
  const double gap = std::log(k) - h3;
  if (arc.k == 2) {
    return weight_from_square(std::expm1(2.0 * gap) / 3.0,
                              "H3 lower inversion");
  }
  const MonicCubic w{3.0 * (k - 1.0) / (2.0 - k), 0.0,
                     (k - 1.0) * (k - 1.0) / (2.0 - k) *
                         -std::expm1(2.0 * gap)};
  return detail::clamp_weight(
      solve_cubic_in_unit_interval(w, RootSelector::Unique),
      "H3 lower inversion");
}

}  // namespace renyi
