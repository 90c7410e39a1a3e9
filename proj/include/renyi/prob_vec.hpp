#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace renyi {

inline constexpr double kNormTol = 1e-12;
inline constexpr double kNegTol = 1e-14;

enum class NormalizeMode { Strict, Renormalize };

/// A validated discrete probability distribution of length N >= 1.
///
/// Components are non-negative and sum to one within kNormTol. The order
/// supplied by the caller is preserved.
class ProbVec {
 public:
  static ProbVec make(std::vector<double> values,
                      NormalizeMode mode = NormalizeMode::Strict);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double max() const noexcept;
  /// Number of components strictly greater than `threshold`.
  std::size_t support_size(double threshold = 0.0) const noexcept;

 private:
  explicit ProbVec(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

inline ProbVec make_prob_vec(std::vector<double> values,
                             NormalizeMode mode = NormalizeMode::Strict) {
  return ProbVec::make(std::move(values), mode);
}

/// Q_k embedded in length N: k equal masses 1/k followed by N-k zeros.
ProbVec flat_k(int k, int n);

/// Entropy order q in [0, inf]. The three distinguished orders are tagged
/// so that evaluation can dispatch to exact formulas.
class RenyiOrder {
 public:
  enum class Kind { Zero, One, Infinity, General };

  static constexpr double kOneEps = 1e-9;

  /// Classifies q; orders within kOneEps of 1 become Shannon.
  static RenyiOrder of(double q);
  static RenyiOrder zero() noexcept { return RenyiOrder(0.0, Kind::Zero); }
  static RenyiOrder shannon() noexcept { return RenyiOrder(1.0, Kind::One); }
  static RenyiOrder infinity() noexcept {
    return RenyiOrder(std::numeric_limits<double>::infinity(), Kind::Infinity);
  }

  double value() const noexcept { return value_; }
  Kind kind() const noexcept { return kind_; }

  friend bool operator==(const RenyiOrder&, const RenyiOrder&) = default;

 private:
  RenyiOrder(double v, Kind k) : value_(v), kind_(k) {}
  double value_;
  Kind kind_;
};

}  // namespace renyi
