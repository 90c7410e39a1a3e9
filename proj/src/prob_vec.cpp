#include "renyi/prob_vec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {

ProbVec ProbVec::make(std::vector<double> values, NormalizeMode mode) {
  if (values.empty()) {
    throw EntropyError(ErrorCode::EmptyVector, "probability vector is empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw EntropyError(ErrorCode::ParseError,
                         "component " + std::to_string(i) + " is not finite");
    }
    if (v < -kNegTol) {
      throw EntropyError(ErrorCode::NegativeComponent,
                         "component " + std::to_string(i) + " is negative");
    }
  }

  if (mode == NormalizeMode::Strict) {
    for (auto& v : values) {
      if (v < 0.0) {
        throw EntropyError(ErrorCode::NegativeComponent,
                           "negative component in strict mode");
      }
    }
    const double sum = std::accumulate(values.begin(), values.end(), 0.0);
    if (std::abs(sum - 1.0) > kNormTol) {
      throw EntropyError(ErrorCode::NotNormalized,
                         "components sum to " + std::to_string(sum));
    }
    return ProbVec(std::move(values));
  }

  for (auto& v : values) v = std::max(v, 0.0);
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(sum > 0.0)) {
    throw EntropyError(ErrorCode::ZeroSum, "components sum to zero");
  }
  for (auto& v : values) v /= sum;
  return ProbVec(std::move(values));
}

double ProbVec::max() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

std::size_t ProbVec::support_size(double threshold) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(),
                    [threshold](double v) { return v > threshold; }));
}

ProbVec flat_k(int k, int n) {
  if (n < 1 || k < 1 || k > n) {
    throw EntropyError(ErrorCode::BadK, "flat_k requires 1 <= k <= N, got k=" +
                                            std::to_string(k) +
                                            " N=" + std::to_string(n));
  }
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  std::fill_n(v.begin(), k, 1.0 / k);
  // 1/k summed k times can miss 1 by more than an ulp for large k, so
  // renormalize instead of strict validation.
  return ProbVec::make(std::move(v), NormalizeMode::Renormalize);
}

RenyiOrder RenyiOrder::of(double q) {
  if (std::isnan(q) || q < 0.0) {
    throw EntropyError(ErrorCode::NegativeOrder,
                       "entropy order must be >= 0, got " + std::to_string(q));
  }
  if (std::isinf(q)) return infinity();
  if (q == 0.0) return zero();
  if (std::abs(q - 1.0) <= kOneEps) return shannon();
  return RenyiOrder(q, Kind::General);
}

}  // namespace renyi
