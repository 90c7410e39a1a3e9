#include "renyi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {
namespace detail {
namespace {

// Below this distance from q = 1 the sum is formed as 1 + s with
// s = sum x (x^(q-1) - 1) so that log1p keeps the small difference.
constexpr double kNearOneBand = 0.5;

double shannon_of_levels(std::span<const Level> levels) {
  double h = 0.0;
  for (const auto& l : levels) {
    if (l.value > 0.0) h -= l.multiplicity * l.value * std::log(l.value);
  }
  return h;
}

double general_of_levels(std::span<const Level> levels, double q) {
  if (std::abs(q - 1.0) <= kNearOneBand) {
    double mass = 0.0;
    double s = 0.0;
    for (const auto& l : levels) {
      if (l.value <= 0.0) continue;
      mass += l.multiplicity * l.value;
      s += l.multiplicity * l.value * std::expm1((q - 1.0) * std::log(l.value));
    }
    return std::log1p(s / mass) / (1.0 - q);
  }
  double vmax = 0.0;
  for (const auto& l : levels) vmax = std::max(vmax, l.value);
  const double log_max = std::log(vmax);
  double scaled = 0.0;
  for (const auto& l : levels) {
    if (l.value <= 0.0) continue;
    scaled += l.multiplicity * std::exp(q * (std::log(l.value) - log_max));
  }
  return (q * log_max + std::log(scaled)) / (1.0 - q);
}

}  // namespace

double renyi_of_levels(std::span<const Level> levels, RenyiOrder q,
                       double support_eps) {
  if (q.kind() == RenyiOrder::Kind::Zero) {
    double m = 0.0;
    for (const auto& l : levels) {
      if (l.value > support_eps) m += l.multiplicity;
    }
    return std::log(m);
  }

  // Flat distributions: ln(k) exactly, independent of q.
  double first = 0.0;
  double count = 0.0;
  bool flat = true;
  for (const auto& l : levels) {
    if (l.value <= 0.0 || l.multiplicity <= 0.0) continue;
    if (count == 0.0) {
      first = l.value;
    } else if (l.value != first) {
      flat = false;
      break;
    }
    count += l.multiplicity;
  }
  if (flat) return std::log(count);

  double h = 0.0;
  switch (q.kind()) {
    case RenyiOrder::Kind::One:
      h = shannon_of_levels(levels);
      break;
    case RenyiOrder::Kind::Infinity: {
      double vmax = 0.0;
      for (const auto& l : levels) vmax = std::max(vmax, l.value);
      h = -std::log(vmax);
      break;
    }
    case RenyiOrder::Kind::General:
      h = general_of_levels(levels, q.value());
      break;
    case RenyiOrder::Kind::Zero:
      break;
  }
  return std::max(h, 0.0);
}

}  // namespace detail

namespace {

std::vector<detail::Level> singleton_levels(const ProbVec& p) {
  std::vector<detail::Level> levels;
  levels.reserve(p.size());
  for (double x : p) levels.push_back({x, 1.0});
  return levels;
}

}  // namespace

EntropyValue shannon(const ProbVec& p) {
  return renyi(p, RenyiOrder::shannon());
}

EntropyValue renyi(const ProbVec& p, RenyiOrder q, double support_eps) {
  const auto levels = singleton_levels(p);
  return {detail::renyi_of_levels(levels, q, support_eps), q};
}

PurityStats purity_stats(const ProbVec& p) {
  double r = 0.0;
  for (double x : p) r += x * x;
  return {r, 1.0 / r, 1.0 - r};
}

double structural_entropy(const ProbVec& p) {
  return shannon(p).nats - renyi(p, 2.0).nats;
}

double tsallis(const ProbVec& p, double q) {
  const auto order = RenyiOrder::of(q);
  if (order.kind() == RenyiOrder::Kind::One) return shannon(p).nats;
  if (order.kind() == RenyiOrder::Kind::Infinity) {
    // (sum x^q - 1) / (1 - q) -> 0 as q -> inf.
    return 0.0;
  }
  if (order.kind() == RenyiOrder::Kind::Zero) {
    return static_cast<double>(p.support_size()) - 1.0;
  }
  // sum x (x^(q-1) - 1) = sum x^q - 1 without the cancellation.
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += x * std::expm1((q - 1.0) * std::log(x));
  }
  return s / (1.0 - q);
}

std::vector<ProfilePoint> renyi_profile(const ProbVec& p,
                                        std::span<const RenyiOrder> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i].value() > grid[i - 1].value())) {
      throw EntropyError(ErrorCode::UnsortedGrid,
                         "order grid must be strictly increasing at index " +
                             std::to_string(i));
    }
  }
  const auto levels = singleton_levels(p);
  std::vector<ProfilePoint> out;
  out.reserve(grid.size());
  for (const auto& q : grid) {
    out.push_back({q.value(), detail::renyi_of_levels(levels, q)});
  }
  return out;
}

}  // namespace renyi
