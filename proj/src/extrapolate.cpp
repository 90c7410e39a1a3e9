#include "renyi/extrapolate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/interp_family.hpp"

namespace renyi {
namespace {

constexpr double kOrderTol = 1e-12;

void require_ordered(double higher, double lower, const char* names) {
  if (!std::isfinite(higher) || !std::isfinite(lower) || lower < 0.0) {
    throw EntropyError(ErrorCode::OutOfRange,
                       std::string("non-finite or negative entropy in ") + names);
  }
  if (lower > higher + kOrderTol) {
    throw EntropyError(ErrorCode::Disordered,
                       std::string("entropies must satisfy ") + names);
  }
}

void require_inputs(double h2, double h3, int n) {
  require_ordered(h2, h3, "H2 >= H3");
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
}

}  // namespace

Estimate upper_interp_H0_H2(double h0, double h2) {
  require_ordered(h0, h2, "H0 >= H2");
  return {0.5 * (h0 + h2), kUsesH0 | kUsesH2, "interp-h0h2"};
}

Estimate structural_interp_H0_H2(double h0, double h2) {
  require_ordered(h0, h2, "H0 >= H2");
  return {0.5 * (h0 - h2), kUsesH0 | kUsesH2, "interp-h0h2-structural"};
}

Estimate lower_extrap_H2_H3(double h2, double h3) {
  require_ordered(h2, h3, "H2 >= H3");
  return {2.0 * h2 - h3, kUsesH2 | kUsesH3, "extrap-h2h3-linear"};
}

Estimate estimate_023(double h0, double h2, double h3) {
  require_ordered(h0, h2, "H0 >= H2");
  require_ordered(h2, h3, "H2 >= H3");
  return {0.25 * (h0 + 5.0 * h2 - 2.0 * h3), kUsesH0 | kUsesH2 | kUsesH3,
          "extrap-h0h2h3-mean"};
}

Estimate upper_extrap_Hup(double h2, double h3, int n) {
  require_inputs(h2, h3, n);
  const double u2 = shannon_bounds_from_H2(h2, n).upper.value;
  const double u3 = shannon_bounds_from_H3(h3, n).upper.value;
  return {2.0 * u2 - u3, kUsesH2 | kUsesH3 | kUsesN, "extrap-ht-upper"};
}

Estimate lower_extrap_Hd(double h2, double h3, int n) {
  require_inputs(h2, h3, n);
  const double d2 = shannon_bounds_from_H2(h2, n).lower.value;
  const double d3 = shannon_bounds_from_H3(h3, n).lower.value;
  return {2.0 * d2 - d3, kUsesH2 | kUsesH3 | kUsesN, "extrap-ht-lower"};
}

Estimate estimate_star_prime(double h2, double h3, int n) {
  require_inputs(h2, h3, n);
  const double u2 = shannon_bounds_from_H2(h2, n).upper.value;
  const double u3 = shannon_bounds_from_H3(h3, n).upper.value;
  return {u2 + h2 - 0.5 * (u3 + h3), kUsesH2 | kUsesH3 | kUsesN,
          "extrap-star-prime"};
}

Estimate estimate_star(double h2, double h3, int n, std::optional<double> h0) {
  require_inputs(h2, h3, n);
  double upper = upper_extrap_Hup(h2, h3, n).value();
  unsigned used = kUsesH2 | kUsesH3 | kUsesN;
  if (h0) {
    upper = std::min(upper_interp_H0_H2(*h0, h2).value(), upper);
    used |= kUsesH0;
  }
  const double d23 = lower_extrap_H2_H3(h2, h3).value();
  const double d12 = shannon_bounds_from_H2(h2, n).lower.value;
  // Ties resolve to the linear extrapolation.
  const double lower = d12 > d23 ? d12 : d23;
  return {0.5 * upper + 0.5 * lower, used, "extrap-star"};
}

EntropyInputs entropy_inputs(const ProbVec& p) {
  return {renyi(p, RenyiOrder::zero()).nats, renyi(p, 2.0).nats,
          renyi(p, 3.0).nats, static_cast<int>(p.size())};
}

std::vector<NamedEstimate> all_estimates(double h2, double h3, int n,
                                         std::optional<double> h0) {
  std::vector<NamedEstimate> out;
  if (h0) {
    out.push_back({"H_u0", upper_interp_H0_H2(*h0, h2)});
    out.push_back({"S_str_u0", structural_interp_H0_H2(*h0, h2)});
    out.push_back({"H_023", estimate_023(*h0, h2, h3)});
  }
  out.push_back({"H_d23", lower_extrap_H2_H3(h2, h3)});
  out.push_back({"H_up", upper_extrap_Hup(h2, h3, n)});
  out.push_back({"H_d", lower_extrap_Hd(h2, h3, n)});
  out.push_back({"H_star_prime", estimate_star_prime(h2, h3, n)});
  out.push_back({"H_star", estimate_star(h2, h3, n, h0)});
  return out;
}

}  // namespace renyi
