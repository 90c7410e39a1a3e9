#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "renyi/prob_vec.hpp"

namespace gen {

/// Random probability vectors for property tests: flat-Dirichlet draws, with
/// some components zeroed or sharpened to reach the simplex boundary.
class VectorGen {
 public:
  explicit VectorGen(std::uint64_t seed) : rng_(seed) {}

  renyi::ProbVec operator()(int n) {
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double style = unit(rng_);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) {
      x = expo(rng_);
      if (style < 0.2 && unit(rng_) < 0.3) x = 0.0;               // sparse
      if (style > 0.8) x = std::pow(x, 4.0);                       // peaked
    }
    v[0] += 1e-3;  // never all zero
    return renyi::ProbVec::make(std::move(v), renyi::NormalizeMode::Renormalize);
  }

  int length(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
