#pragma once

#include <span>
#include <vector>

#include "renyi/prob_vec.hpp"

namespace renyi {

/// An entropy in nats together with the order it was evaluated at.
struct EntropyValue {
  double nats;
  RenyiOrder order;
};

/// Index of coincidence r = sum x_i^2, participation ratio R = 1/r and
/// linear entropy L = 1 - r.
struct PurityStats {
  double coincidence_index;
  double participation_ratio;
  double linear_entropy;
};

struct ProfilePoint {
  double q;
  double nats;
};

EntropyValue shannon(const ProbVec& p);

/// Renyi entropy of order q. Orders within RenyiOrder::kOneEps of 1 use the
/// Shannon formula; q = 0 counts components above `support_eps`; q = inf is
/// -ln max x_i.
EntropyValue renyi(const ProbVec& p, RenyiOrder q, double support_eps = 0.0);
inline EntropyValue renyi(const ProbVec& p, double q) {
  return renyi(p, RenyiOrder::of(q));
}

PurityStats purity_stats(const ProbVec& p);

/// H_1 - H_2; non-negative up to rounding.
double structural_entropy(const ProbVec& p);

/// Havrda-Charvat / Tsallis entropy (sum x^q - 1) / (1 - q). The q -> 1
/// limit is the Shannon entropy.
double tsallis(const ProbVec& p, double q);

/// Entropies along a strictly increasing grid of orders.
std::vector<ProfilePoint> renyi_profile(const ProbVec& p,
                                        std::span<const RenyiOrder> grid);

namespace detail {

/// A group of `multiplicity` equal probabilities of size `value`.
struct Level {
  double value;
  double multiplicity;
};

/// Renyi entropy of a distribution given as level groups. A distribution
/// whose positive mass sits on a single level is flat and evaluates to
/// exactly ln(multiplicity) for every order.
double renyi_of_levels(std::span<const Level> levels, RenyiOrder q,
                       double support_eps = 0.0);

}  // namespace detail

}  // namespace renyi
