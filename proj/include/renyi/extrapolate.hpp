#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renyi/bounds.hpp"
#include "renyi/prob_vec.hpp"

namespace renyi {

/// Which entropies an estimate was built from.
enum Ingredient : unsigned {
  kUsesH0 = 1u << 0,
  kUsesH2 = 1u << 1,
  kUsesH3 = 1u << 2,
  kUsesN = 1u << 3,
};

/// A Shannon-entropy extrapolation. These rest on a convexity argument in q
/// that does not hold in general, so none of them is a bound: `rigor` is
/// always Heuristic and there is no way to construct one otherwise.
class Estimate {
 public:
  Estimate(double value, unsigned ingredients, std::string source)
      : value_(value), ingredients_(ingredients), source_(std::move(source)) {}

  double value() const noexcept { return value_; }
  Rigor rigor() const noexcept { return Rigor::Heuristic; }
  unsigned ingredients() const noexcept { return ingredients_; }
  const std::string& source() const noexcept { return source_; }

 private:
  double value_;
  unsigned ingredients_;
  std::string source_;
};

/// (H0 + H2) / 2.
Estimate upper_interp_H0_H2(double h0, double h2);
/// (H0 - H2) / 2, the structural-entropy form of the estimate above.
Estimate structural_interp_H0_H2(double h0, double h2);
/// 2 H2 - H3.
Estimate lower_extrap_H2_H3(double h2, double h3);
/// (H0 + 5 H2 - 2 H3) / 4, the mean of the two estimates above.
Estimate estimate_023(double h0, double h2, double h3);
/// 2 H12u - H13u.
Estimate upper_extrap_Hup(double h2, double h3, int n);
/// 2 H12d - H13d.
Estimate lower_extrap_Hd(double h2, double h3, int n);
/// H12u + H2 - (H13u + H3) / 2, equal to (H_up + H_d23) / 2.
Estimate estimate_star_prime(double h2, double h3, int n);
/// H_u / 2 + max(H_d23, H12d) / 2 with H_u = H_up, or min(H_u0, H_up) when
/// H0 is known.
Estimate estimate_star(double h2, double h3, int n,
                       std::optional<double> h0 = std::nullopt);

/// Entropies an extrapolation consumes, computed from a known vector.
struct EntropyInputs {
  double h0;
  double h2;
  double h3;
  int n;
};

EntropyInputs entropy_inputs(const ProbVec& p);

struct NamedEstimate {
  std::string name;
  Estimate estimate;
};

/// Every estimate available from the inputs, in a fixed order. The H0-based
/// ones are included only when h0 is given.
std::vector<NamedEstimate> all_estimates(double h2, double h3, int n,
                                         std::optional<double> h0);

}  // namespace renyi
