#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/prob_vec.hpp"

namespace renyi {

/// Seeded, versioned random stream. The same seed always yields the same
/// sequence: 64-bit Mersenne Twister words, 53-bit uniforms, and normals from
/// the Marsaglia polar method (no reliance on std:: distributions, whose
/// output is implementation-defined).
class RngHandle {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+polar-normal/v1";

  explicit RngHandle(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double normal();

  /// Independent stream derived from (seed, index).
  RngHandle substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Random vector from the Fisher-Rao measure on the simplex: x_i = t_i^2 for
/// t uniform on the unit sphere S^{N-1}.
ProbVec sample_fisher_rao(int n, RngHandle& rng);

struct DeviationChannel {
  std::string name;
  std::vector<std::uint64_t> counts;
  std::vector<double> density;
  double mean = 0.0;
  double stddev = 0.0;
  double mean_abs = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Histogrammed errors of Shannon-entropy extrapolations over random vectors.
/// delta1 = H_star - H1, delta2 = (2 H2 - H3) - H1; the optional hd channel
/// is (2 H12d - H13d) - H1.
struct DeviationStats {
  int n = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::vector<double> bin_edges;
  DeviationChannel delta1;
  DeviationChannel delta2;
  std::optional<DeviationChannel> delta_hd;
  /// Samples where H1 left a rigorous sandwich (should stay zero).
  std::uint64_t sandwich_violations = 0;
  /// Samples where H_star fell outside [H13d, H12u].
  std::uint64_t star_outside_sandwich = 0;
  /// Samples where the H3 bounds were tighter than the H2 bounds.
  std::uint64_t dominance_violations = 0;
};

struct DeviationOptions {
  int bins = 60;
  /// 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
  bool include_hd = false;
};

/// Samples are drawn in fixed-size chunks, chunk c from
/// RngHandle(seed).substream(c), so the output is bit-identical for any
/// thread count.
DeviationStats deviation_study(int n, std::uint64_t count, std::uint64_t seed,
                               const DeviationOptions& options = {});

}  // namespace renyi
