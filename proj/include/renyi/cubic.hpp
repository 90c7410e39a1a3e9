#pragma once

namespace renyi {

/// Monic cubic a^3 + c2 a^2 + c1 a + c0.
struct MonicCubic {
  double c2;
  double c1;
  double c0;

  double operator()(double a) const noexcept {
    return ((a + c2) * a + c1) * a + c0;
  }
  double derivative(double a) const noexcept {
    return (3.0 * a + 2.0 * c2) * a + c1;
  }
};

enum class RootSelector { Largest, Unique };

/// Root of a monic cubic inside [0, 1].
///
/// Sign changes are located on a 1e-3 scan of the interval, then each
/// bracket is shrunk by safeguarded Newton steps (bisection whenever Newton
/// leaves the bracket) until it is narrower than 1e-14. A root sitting
/// exactly on a scan node, or an endpoint whose residual is at rounding
/// level, also counts.
///
/// Throws NoRootInUnitInterval when nothing is found, and MultipleRoots when
/// `Unique` was requested and more than one candidate exists.
double solve_cubic_in_unit_interval(const MonicCubic& cubic,
                                    RootSelector selector);

inline double solve_cubic_in_unit_interval(double c2, double c1, double c0,
                                           RootSelector selector) {
  return solve_cubic_in_unit_interval(MonicCubic{c2, c1, c0}, selector);
}

}  // namespace renyi
