#pragma once

#include "renyi/entropy.hpp"
#include "renyi/prob_vec.hpp"

namespace renyi {

/// Two-level mixture a Q_k + (1 - a) Q_l of flat distributions, realized in
/// length l. The upper boundary of the entropy plane is traced by (1, N, a),
/// the lower cascade by (k - 1, k, a).
class InterpDist {
 public:
  /// Throws BadInterp unless 1 <= k < l and a lies in [0, 1] (excursions up
  /// to 1e-12 are clamped).
  InterpDist(int k, int l, double a);

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  double a() const noexcept { return a_; }

  /// Mass of each of the first k components.
  double high_level() const noexcept { return a_ / k_ + (1.0 - a_) / l_; }
  /// Mass of each of the remaining l - k components.
  double low_level() const noexcept { return (1.0 - a_) / l_; }

 private:
  int k_;
  int l_;
  double a_;
};

/// Arc selector k >= 2 with ln(k - 1) <= H <= ln k.
struct ArcIndex {
  explicit ArcIndex(int value);
  int k;
};

ProbVec interp_vector(const InterpDist& d);

/// H_q of the mixture evaluated from its two levels.
EntropyValue interp_renyi(const InterpDist& d, RenyiOrder q);

inline constexpr double kArcTieTol = 1e-12;
/// Tolerance on an entropy exceeding [0, ln N] that is absorbed as noise.
inline constexpr double kEntropyClampTol = 1e-9;
/// Tolerance on a computed mixing weight leaving [0, 1].
inline constexpr double kWeightClampTol = 1e-9;

/// Smallest k >= 2 with H <= ln k (+ tie tolerance). Requires N >= 2 and
/// 0 <= H <= ln N.
ArcIndex select_arc(double entropy, int n);

/// Mixing weight of Q_{1,N}(a) with the given H_2.
double invert_a_from_H2_top(double h2, int n);
/// Mixing weight of Q_{k-1,k}(a) with the given H_2.
double invert_a_from_H2_bottom(double h2, ArcIndex k);
/// Mixing weight of Q_{1,N}(a) with the given H_3: the largest root in [0,1]
/// of a^3 + 3a^2/(N-2) - (N^2 e^{-2 H_3} - 1)/((N-1)(N-2)). N = 2 uses the
/// two-point closed form.
double invert_a_from_H3_top(double h3, int n);
/// Mixing weight of Q_{k-1,k}(a) with the given H_3. Closed form for k = 2,
/// otherwise the unique root in [0, 1] of
/// a^3 + a^2 3(k-1)/(2-k) + (k-1)^2/(2-k) (1 - k^2 e^{-2 H_3}).
double invert_a_from_H3_bottom(double h3, ArcIndex k);

namespace detail {

/// Validates 0 <= h <= ln n, clamping excursions up to kEntropyClampTol.
double checked_entropy(double h, int n, const char* what);

/// Clamps a computed weight that strays from [0, 1] by rounding noise.
double clamp_weight(double a, const char* what);

}  // namespace detail

}  // namespace renyi
