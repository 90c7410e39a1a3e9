#include "renyi/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "renyi/bounds.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/extrapolate.hpp"
#include "renyi/interp_family.hpp"
#include "renyi/sampling.hpp"

namespace renyi {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_label(const char* key, double value) {
  std::ostringstream os;
  os.precision(12);
  os << key << '=' << value;
  return os.str();
}

struct Bary {
  double x1, x2, x3;
};

// Segment endpoints are identified by the lattice edge they lie on.
using EdgeKey = std::uint64_t;

EdgeKey edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<EdgeKey>(a) << 32) | b;
}

class ContourTracer {
 public:
  ContourTracer(RenyiOrder q, int grid)
      : q_(q), grid_(grid), values_(vertex_count()) {
    for (int i = 0; i <= grid_; ++i) {
      for (int j = 0; i + j <= grid_; ++j) values_[id(i, j)] = entropy(at(i, j));
    }
  }

  std::vector<Polyline> trace(double level, const std::string& label) const {
    std::vector<std::array<EdgeKey, 2>> segments;
    std::unordered_map<EdgeKey, Point2> points;
    std::unordered_map<EdgeKey, std::array<int, 2>> incident;

    auto crossing = [&](std::uint32_t a, std::uint32_t b) {
      const EdgeKey key = edge_key(a, b);
      if (!points.contains(key)) {
        const Bary x = edge_crossing(at_id(a), values_[a], at_id(b), level);
        points.emplace(key, SimplexChart::to_plane(x.x1, x.x2, x.x3));
      }
      return key;
    };

    auto add_triangle = [&](std::uint32_t v0, std::uint32_t v1,
                            std::uint32_t v2) {
      const std::array<std::uint32_t, 3> v{v0, v1, v2};
      std::array<bool, 3> above{};
      int n_above = 0;
      for (int i = 0; i < 3; ++i) {
        above[i] = values_[v[i]] >= level;
        n_above += above[i];
      }
      if (n_above == 0 || n_above == 3) return;
      const bool lone_state = n_above == 1;
      int lone = 0;
      while (above[lone] != lone_state) ++lone;
      const std::uint32_t a = v[lone];
      const std::uint32_t b = v[(lone + 1) % 3];
      const std::uint32_t c = v[(lone + 2) % 3];
      const int seg = static_cast<int>(segments.size());
      segments.push_back({crossing(a, b), crossing(a, c)});
      for (EdgeKey key : segments.back()) {
        auto [it, fresh] = incident.try_emplace(key, std::array<int, 2>{seg, -1});
        if (!fresh) it->second[1] = seg;
      }
    };

    for (int i = 0; i < grid_; ++i) {
      for (int j = 0; i + j < grid_; ++j) {
        add_triangle(id(i, j), id(i + 1, j), id(i, j + 1));
        if (i + j + 2 <= grid_) {
          add_triangle(id(i + 1, j), id(i, j + 1), id(i + 1, j + 1));
        }
      }
    }
    return chain(segments, points, incident, label);
  }

 private:
  double entropy(const Bary& x) const {
    const std::array<detail::Level, 3> lv{{{x.x1, 1.0}, {x.x2, 1.0}, {x.x3, 1.0}}};
    return detail::renyi_of_levels(lv, q_);
  }

  // The entropy is steep near the simplex edges, where linear interpolation
  // of vertex values is poor, so the crossing is bisected on the true
  // function along the lattice edge.
  Bary edge_crossing(const Bary& xa, double ha, const Bary& xb,
                     double level) const {
    auto point = [&](double t) {
      return Bary{xa.x1 + t * (xb.x1 - xa.x1), xa.x2 + t * (xb.x2 - xa.x2),
                  xa.x3 + t * (xb.x3 - xa.x3)};
    };
    const bool a_above = ha >= level;
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 48; ++it) {
      const double mid = 0.5 * (lo + hi);
      ((entropy(point(mid)) >= level) == a_above ? lo : hi) = mid;
    }
    return point(0.5 * (lo + hi));
  }

  std::size_t vertex_count() const {
    return static_cast<std::size_t>(grid_ + 1) * (grid_ + 1);
  }
  std::uint32_t id(int i, int j) const {
    return static_cast<std::uint32_t>(i * (grid_ + 1) + j);
  }
  Bary at(int i, int j) const {
    const double g = grid_;
    return {i / g, j / g, (grid_ - i - j) / g};
  }
  Bary at_id(std::uint32_t v) const {
    return at(static_cast<int>(v) / (grid_ + 1), static_cast<int>(v) % (grid_ + 1));
  }

  static std::vector<Polyline> chain(
      const std::vector<std::array<EdgeKey, 2>>& segments,
      const std::unordered_map<EdgeKey, Point2>& points,
      const std::unordered_map<EdgeKey, std::array<int, 2>>& incident,
      const std::string& label) {
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;

    auto walk = [&](int seg, EdgeKey start) {
      Polyline line;
      line.label = label;
      line.points.push_back(points.at(start));
      EdgeKey at = start;
      while (seg >= 0 && !used[static_cast<std::size_t>(seg)]) {
        used[static_cast<std::size_t>(seg)] = true;
        const auto& s = segments[static_cast<std::size_t>(seg)];
        at = s[0] == at ? s[1] : s[0];
        line.points.push_back(points.at(at));
        const auto& inc = incident.at(at);
        seg = inc[0] == seg ? inc[1] : inc[0];
      }
      if (line.points.size() >= 2) out.push_back(std::move(line));
    };

    // Open chains start at an edge touched by one segment, loops anywhere.
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (used[s]) continue;
      for (EdgeKey end : segments[s]) {
        if (incident.at(end)[1] < 0) {
          walk(static_cast<int>(s), end);
          break;
        }
      }
    }
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (!used[s]) walk(static_cast<int>(s), segments[s][0]);
    }
    return out;
  }

  RenyiOrder q_;
  int grid_;
  std::vector<double> values_;
};

// a in [0, 1] with entropy(a) = target, entropy non-increasing in a.
double bisect_weight(const std::function<double(double)>& entropy,
                     double target) {
  if (target >= entropy(0.0)) return 0.0;
  if (target <= entropy(1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (entropy(mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double family_at(int k, int l, double s, double q, double h_s) {
  const auto so = RenyiOrder::of(s);
  const double a = bisect_weight(
      [&](double w) { return interp_renyi(InterpDist(k, l, w), so).nats; }, h_s);
  return interp_renyi(InterpDist(k, l, a), RenyiOrder::of(q)).nats;
}

Polyline sample_arc(int k, int l, double q, double s, int samples,
                    std::string label) {
  const auto qo = RenyiOrder::of(q);
  const auto so = RenyiOrder::of(s);
  Polyline line;
  line.label = std::move(label);
  line.points.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double a = 1.0 - static_cast<double>(j) / (samples - 1);
    const InterpDist d(k, l, a);
    line.points.push_back({interp_renyi(d, so).nats, interp_renyi(d, qo).nats});
  }
  return line;
}

}  // namespace

Point2 SimplexChart::to_plane(double x1, double x2, double x3) noexcept {
  return {(x2 - x1) / kSqrt2, (2.0 * x3 - x1 - x2) / kSqrt6};
}

void SimplexChart::to_simplex(Point2 p, double& x1, double& x2,
                              double& x3) noexcept {
  x3 = (1.0 + p.y * kSqrt6) / 3.0;
  x2 = 0.5 * (1.0 - x3 + p.x * kSqrt2);
  x1 = 0.5 * (1.0 - x3 - p.x * kSqrt2);
}

std::vector<Polyline> iso_entropy_contours(RenyiOrder q,
                                           std::span<const double> levels,
                                           int grid) {
  if (grid < 32) {
    throw EntropyError(ErrorCode::BadGrid,
                       "contour grid must be >= 32, got " + std::to_string(grid));
  }
  const double ln3 = std::log(3.0);
  for (double level : levels) {
    if (!(level > 0.0 && level < ln3)) {
      throw EntropyError(ErrorCode::LevelOutOfRange,
                         "contour level " + std::to_string(level) +
                             " outside (0, ln 3)");
    }
  }
  const ContourTracer tracer(q, grid);
  std::vector<Polyline> out;
  for (double level : levels) {
    auto lines = tracer.trace(level, format_label("level", level));
    std::move(lines.begin(), lines.end(), std::back_inserter(out));
  }
  return out;
}

double PlaneBoundary::single_arc_at(double h_s) const {
  h_s = detail::checked_entropy(h_s, n, "H_s");
  return family_at(1, n, s, q, h_s);
}

double PlaneBoundary::cascade_at(double h_s) const {
  h_s = detail::checked_entropy(h_s, n, "H_s");
  const int k = select_arc(h_s, n).k;
  return family_at(k - 1, k, s, q, h_s);
}

bool PlaneBoundary::contains(double h_s, double h_q, double tol) const {
  const double ln_n = std::log(static_cast<double>(n));
  if (!(h_s >= -tol && h_s <= ln_n + tol)) return false;
  h_s = std::clamp(h_s, 0.0, ln_n);
  const double a = single_arc_at(h_s);
  const double b = cascade_at(h_s);
  return h_q >= std::min(a, b) - tol && h_q <= std::max(a, b) + tol;
}

PlaneBoundary entropy_plane_boundary(double q, double s, int n,
                                     int samples_per_arc) {
  if (std::isnan(q) || std::isnan(s) || q < 0.0 || s < 0.0) {
    throw EntropyError(ErrorCode::NegativeOrder, "orders must be >= 0");
  }
  if (q == s || s == 0.0) {
    throw EntropyError(ErrorCode::DegenerateOrders,
                       "entropy plane needs distinct orders and s > 0");
  }
  if (n < 2) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 2");
  if (samples_per_arc < 2) {
    throw EntropyError(ErrorCode::BadGrid, "need at least 2 samples per arc");
  }

  PlaneBoundary b;
  b.q = q;
  b.s = s;
  b.n = n;
  b.upper_arc = sample_arc(1, n, q, s, samples_per_arc, "Q_{1," + std::to_string(n) + "}");
  for (int k = 1; k < n; ++k) {
    b.lower_cascade.push_back(sample_arc(
        k, k + 1, q, s, samples_per_arc,
        "Q_{" + std::to_string(k) + "," + std::to_string(k + 1) + "}"));
  }
  for (int k = 1; k <= n; ++k) {
    const double lk = std::log(static_cast<double>(k));
    b.lattice_points.push_back({lk, lk});
  }
  const double ln_n = std::log(static_cast<double>(n));
  b.monotonicity_line = {{{0.0, 0.0}, {ln_n, ln_n}}, "monotonicity"};
  if (q == 1.0 && s == 2.0) {
    Polyline curve;
    curve.label = "simple-upper";
    for (int j = 0; j < samples_per_arc; ++j) {
      const double x = ln_n * j / (samples_per_arc - 1);
      curve.points.push_back({x, ln_n + 1.0 / n - std::exp(-x)});
    }
    b.simple_upper_curve = std::move(curve);
  }
  return b;
}

ProfileDataset profile_with_bounds(const ProbVec& p,
                                   std::span<const double> q_grid) {
  std::vector<RenyiOrder> orders;
  orders.reserve(q_grid.size());
  for (double q : q_grid) orders.push_back(RenyiOrder::of(q));
  const auto profile = renyi_profile(p, orders);

  const auto in = entropy_inputs(p);
  const int n = in.n;
  ProfileDataset ds;
  ds.n = n;
  ds.h1 = shannon(p).nats;
  ds.h2 = in.h2;
  ds.h3 = in.h3;
  ds.h_star = estimate_star(in.h2, in.h3, n).value();
  ds.h_up = upper_extrap_Hup(in.h2, in.h3, n).value();
  ds.h_d23 = lower_extrap_H2_H3(in.h2, in.h3).value();
  const double u2 = shannon_bounds_from_H2(in.h2, n).upper.value;
  const double u3 = shannon_bounds_from_H3(in.h3, n).upper.value;

  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double q = profile[i].q;
    ProfileRow row{q, profile[i].nats, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
    if (q > 0.0 && q < 2.0) {
      const auto b = renyi_bounds_from_H2(in.h2, n, q);
      row.h2_lower = b.lower.value;
      row.h2_upper = b.upper.value;
    }
    if (q > 0.0 && q < 3.0) {
      const auto b = renyi_bounds_from_H3(in.h3, n, q);
      row.h3_lower = b.lower.value;
      row.h3_upper = b.upper.value;
    }
    if (std::isfinite(q)) {
      row.line_lower = in.h2 + (q - 2.0) * (in.h3 - in.h2);
      row.line_upper = u2 + (q - 2.0) * (u3 - u2);
    }
    ds.rows.push_back(row);
  }
  return ds;
}

namespace figure_defaults {

std::vector<double> profile_grid() {
  const int steps = static_cast<int>(std::lround(kProfileQMax / kProfileQStep));
  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i) grid.push_back(i * kProfileQStep);
  return grid;
}

ProbVec profile_vector() {
  RngHandle rng(kProfileSeed);
  return sample_fisher_rao(kProfileN, rng);
}

}  // namespace figure_defaults

}  // namespace renyi
