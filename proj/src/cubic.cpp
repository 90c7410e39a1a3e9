#include "renyi/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {
namespace {

constexpr int kScanSteps = 1000;
constexpr double kWidthTol = 1e-14;
constexpr double kEndpointResidual = 1e-12;
constexpr int kMaxIterations = 200;

double refine(const MonicCubic& w, double lo, double hi) {
  double flo = w(lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations && hi - lo > kWidthTol; ++it) {
    const double fx = w(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = w.derivative(x);
    double next = d != 0.0 ? x - fx / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  // Return whichever end of the final bracket has the smaller residual.
  double best = lo;
  for (double c : {hi, x}) {
    if (std::abs(w(c)) < std::abs(w(best))) best = c;
  }
  return best;
}

}  // namespace

double solve_cubic_in_unit_interval(const MonicCubic& w,
                                    RootSelector selector) {
  std::vector<double> roots;
  double prev_x = 0.0;
  double prev_f = w(0.0);
  if (prev_f == 0.0) roots.push_back(0.0);
  for (int i = 1; i <= kScanSteps; ++i) {
    const double x = static_cast<double>(i) / kScanSteps;
    const double f = w(x);
    if (f == 0.0) {
      roots.push_back(x);
    } else if (prev_f != 0.0 && (f < 0.0) != (prev_f < 0.0)) {
      roots.push_back(refine(w, prev_x, x));
    }
    prev_x = x;
    prev_f = f;
  }

  if (roots.empty()) {
    // Endpoint roots perturbed by rounding may not produce a sign change.
    const double f0 = std::abs(w(0.0));
    const double f1 = std::abs(w(1.0));
    if (std::min(f0, f1) <= kEndpointResidual) {
      roots.push_back(f0 <= f1 ? 0.0 : 1.0);
    }
  }
  if (roots.empty()) {
    throw EntropyError(ErrorCode::NoRootInUnitInterval,
                       "cubic has no root in [0, 1]");
  }
  if (selector == RootSelector::Unique && roots.size() > 1) {
    throw EntropyError(ErrorCode::MultipleRoots,
                       "cubic has " + std::to_string(roots.size()) +
                           " roots in [0, 1]");
  }
  return roots.back();
}

}  // namespace renyi
