#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renyi/prob_vec.hpp"

namespace renyi {

struct Point2 {
  double x;
  double y;
};

struct Polyline {
  std::vector<Point2> points;
  std::string label;
};

/// Isometric chart of the N = 3 simplex. The triangle has side sqrt(2) and
/// its centre Q_3 sits at the origin; corner (1,0,0) maps to
/// (-1/sqrt 2, -1/sqrt 6).
struct SimplexChart {
  static Point2 to_plane(double x1, double x2, double x3) noexcept;
  static void to_simplex(Point2 p, double& x1, double& x2, double& x3) noexcept;
};

/// Level sets of H_q on the N = 3 simplex, in SimplexChart coordinates.
///
/// The triangle is split into grid^2 congruent cells on the barycentric
/// lattice and contours are traced by marching triangles with linear
/// interpolation along cell edges, then chained into polylines. Each level
/// must lie in (0, ln 3); grid must be at least 32.
std::vector<Polyline> iso_entropy_contours(RenyiOrder q,
                                           std::span<const double> levels,
                                           int grid = 512);

/// Boundary of the set of attainable (H_s, H_q) pairs for length N.
struct PlaneBoundary {
  double q = 1.0;
  double s = 2.0;
  int n = 2;
  /// Q_{1,N}(a) for a from 1 to 0.
  Polyline upper_arc;
  /// Q_{k,k+1}(a) for k = 1 .. N-1, each from a = 1 to 0.
  std::vector<Polyline> lower_cascade;
  /// (ln k, ln k) for k = 1 .. N.
  std::vector<Point2> lattice_points;
  /// The diagonal H_q = H_s.
  Polyline monotonicity_line;
  /// ln N + 1/N - exp(-H_2); present only for q = 1, s = 2.
  std::optional<Polyline> simple_upper_curve;

  /// H_q on the Q_{1,N} arc at abscissa h_s.
  double single_arc_at(double h_s) const;
  /// H_q on the cascade at abscissa h_s.
  double cascade_at(double h_s) const;
  /// Whether (h_s, h_q) lies between the two boundary curves.
  bool contains(double h_s, double h_q, double tol = 1e-9) const;
};

PlaneBoundary entropy_plane_boundary(double q, double s, int n,
                                     int samples_per_arc = 201);

/// One grid order of the profile dataset. Bound columns are NaN outside the
/// orders where the corresponding bound applies.
struct ProfileRow {
  double q;
  double entropy;
  double h2_lower;
  double h2_upper;
  double h3_lower;
  double h3_upper;
  /// Line through (2, H2) and (3, H3).
  double line_lower;
  /// Line through (2, H12u) and (3, H13u).
  double line_upper;
};

struct ProfileDataset {
  int n;
  double h1;
  double h2;
  double h3;
  double h_star;
  double h_up;
  double h_d23;
  std::vector<ProfileRow> rows;
};

ProfileDataset profile_with_bounds(const ProbVec& p,
                                   std::span<const double> q_grid);

namespace figure_defaults {
inline constexpr int kContourGrid = 512;
inline constexpr int kProfileN = 15;
inline constexpr std::uint64_t kProfileSeed = 20050217;
inline constexpr double kProfileQMax = 8.0;
inline constexpr double kProfileQStep = 0.05;
inline constexpr int kDeviationN = 10;
inline constexpr std::uint64_t kDeviationCount = 10000;
inline constexpr std::uint64_t kDeviationSeed = 42;

/// 0, 0.05, ..., 8.
std::vector<double> profile_grid();
/// Random profile vector used when none is supplied.
ProbVec profile_vector();
}  // namespace figure_defaults

}  // namespace renyi
