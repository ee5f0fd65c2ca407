#include "mexneedlet/sphere_partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mexneedlet/error.hpp"
#include "mexneedlet/quadrature.hpp"

namespace mexneedlet {

namespace {

constexpr double kMaxCells = 5e9;

// Distance bound along a parallel: 2 asin(s sin(min(dphi, pi) / 2)).
double parallel_chord(double s_max, double dphi) {
  return 2.0 * std::asin(std::min(1.0, s_max * std::sin(std::min(dphi, kPi) / 2.0)));
}

// Label of x in a greedy partition: the first k >= (last index whose inner ball
// holds x) with x in the outer ball of k. Equivalent to the recursive definition
// E_k = B'_k \ (E_1 u ... u E_{k-1} u B_{k+1} u ... u B_N).
std::size_t greedy_label(const std::vector<Vec3>& centers, double t, const Vec3& x) {
  const std::size_t n = centers.size();
  std::size_t first = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (geodesic_distance(centers[i], x) < t) {
      first = i;
      break;
    }
  }
  for (std::size_t k = first; k < n; ++k) {
    if (geodesic_distance(centers[k], x) < 2.0 * t) return k;
  }
  return n;
}

}  // namespace

std::vector<Vec3> fibonacci_lattice(int n) {
  if (n < 1) throw ParameterError("Fibonacci lattice needs n >= 1");
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    points.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
  }
  return points;
}

ScalePartition build_partition(int j, double a, double b) {
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  if (!(b > 0.0 && b <= 1.0)) throw ParameterError("fineness b must lie in (0, 1]");
  const double d = b * std::pow(a, j);
  if (!std::isfinite(d)) throw ParameterError("b a^j is not finite");

  ScalePartition out;
  out.j_ = j;
  out.target_ = d;
  ScalePartition::Bands layout;

  if (d >= kPi) {
    layout.bands.push_back({0.0, kPi, 1, kFourPi, kPi, 0.0});
  } else {
    if (d < kMinCellDiameter) {
      throw SizeOverflowError("b a^j below the desk-scale limit 1e-3");
    }
    const double rho = d / 2.0;
    const double span = kPi - 2.0 * rho;
    const int n_bands = static_cast<int>(std::ceil(span / (d / 2.0) - 1e-12));
    const double h = span / n_bands;
    const double cap_measure = cap_area(rho);

    double estimated = 2.0;
    layout.bands.push_back({0.0, rho, 1, cap_measure, 2.0 * rho, 0.0});
    for (int i = 0; i < n_bands; ++i) {
      const double lo = rho + i * h;
      const double hi = i + 1 == n_bands ? kPi - rho : rho + (i + 1) * h;
      const double s_max =
          (lo <= kPi / 2.0 && hi >= kPi / 2.0) ? 1.0 : std::max(std::sin(lo), std::sin(hi));
      const double allowed = d - (hi - lo);
      int count = 1;
      const double ratio = std::sin(allowed / 2.0) / s_max;
      if (ratio < 1.0) {
        const double dphi_max = 2.0 * std::asin(ratio);
        count = static_cast<int>(std::ceil(kTwoPi / dphi_max - 1e-12));
        while (hi - lo + parallel_chord(s_max, kTwoPi / count) > d) ++count;
      }
      estimated += count;
      if (estimated > kMaxCells) throw SizeOverflowError("partition has too many cells");
      const double dphi = kTwoPi / count;
      const double measure = dphi * (std::cos(lo) - std::cos(hi));
      const double diameter = (hi - lo) + parallel_chord(s_max, dphi);
      const double center_theta = std::acos(0.5 * (std::cos(lo) + std::cos(hi)));
      layout.bands.push_back({lo, hi, count, measure, diameter, center_theta});
    }
    layout.bands.push_back({kPi - rho, kPi, 1, cap_measure, 2.0 * rho, kPi});
  }

  layout.offsets.assign(1, 0);
  for (const auto& band : layout.bands) {
    layout.offsets.push_back(layout.offsets.back() + static_cast<std::size_t>(band.count));
  }
  out.layout_ = std::move(layout);
  return out;
}

ScalePartition greedy_ball_partition(double t, int candidates, int grid_rings) {
  if (!(t > 0.0 && t < kPi)) throw ParameterError("greedy partition radius must lie in (0, pi)");
  if (candidates < 1) throw ParameterError("greedy partition needs candidates");
  if (grid_rings < 8) throw ParameterError("greedy partition grid too coarse");

  const std::vector<Vec3> pool = fibonacci_lattice(candidates);
  std::vector<Vec3> centers;
  for (const Vec3& y : pool) {
    const bool disjoint = std::all_of(centers.begin(), centers.end(), [&](const Vec3& c) {
      return geodesic_distance(c, y) >= 2.0 * t;
    });
    if (disjoint) centers.push_back(y);
  }

  ScalePartition::Greedy greedy;
  greedy.t = t;
  greedy.centers = centers;
  greedy.maximal_on_candidates = std::all_of(pool.begin(), pool.end(), [&](const Vec3& y) {
    return std::any_of(centers.begin(), centers.end(),
                       [&](const Vec3& c) { return geodesic_distance(c, y) < 2.0 * t; });
  });

  greedy.measures.assign(centers.size(), 0.0);
  greedy.uncovered_grid_nodes = 0;
  const GaussLegendre gl = gauss_legendre(grid_rings);
  const int n_phi = 2 * grid_rings;
  for (int i = 0; i < grid_rings; ++i) {
    const double theta = std::acos(gl.nodes[static_cast<std::size_t>(i)]);
    const double w = gl.weights[static_cast<std::size_t>(i)] * kTwoPi / n_phi;
    for (int k = 0; k < n_phi; ++k) {
      const Vec3 x = from_angles(theta, kTwoPi * (k + 0.5) / n_phi);
      const std::size_t label = greedy_label(centers, t, x);
      if (label < centers.size()) {
        greedy.measures[label] += w;
      } else {
        ++greedy.uncovered_grid_nodes;
      }
    }
  }

  ScalePartition out;
  out.j_ = 0;
  out.target_ = 4.0 * t;
  out.layout_ = std::move(greedy);
  return out;
}

std::size_t ScalePartition::size() const {
  if (const auto* bands = std::get_if<Bands>(&layout_)) return bands->offsets.back();
  return std::get<Greedy>(layout_).centers.size();
}

Cell ScalePartition::cell(std::size_t k) const {
  if (k >= size()) throw ParameterError("cell index out of range");
  if (const auto* g = std::get_if<Greedy>(&layout_)) {
    return {g->centers[k], g->measures[k], 4.0 * g->t, BallCell{g->t, 2.0 * g->t}};
  }
  const auto& bands = std::get<Bands>(layout_);
  const auto it = std::upper_bound(bands.offsets.begin(), bands.offsets.end(), k);
  const std::size_t bi = static_cast<std::size_t>(it - bands.offsets.begin()) - 1;
  const Band& band = bands.bands[bi];
  const std::size_t n = k - bands.offsets[bi];
  const double dphi = kTwoPi / band.count;
  BandRect rect{band.theta_lo, band.theta_hi, n * dphi, (n + 1) * dphi};
  if (band.count == 1) rect.phi_hi = kTwoPi;
  const double phi_c = band.count == 1 ? 0.0 : (n + 0.5) * dphi;
  return {from_angles(band.center_theta, phi_c), band.cell_measure, band.diameter_bound, rect};
}

std::vector<Cell> ScalePartition::cells() const {
  std::vector<Cell> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(cell(k));
  return out;
}

std::size_t ScalePartition::locate(const Vec3& x) const {
  if (const auto* g = std::get_if<Greedy>(&layout_)) return greedy_label(g->centers, g->t, x);
  const auto& bands = std::get<Bands>(layout_);
  const double theta = colatitude(x);
  // First band whose upper edge is >= theta: ties go to the lower index.
  const auto it = std::lower_bound(bands.bands.begin(), bands.bands.end(), theta,
                                   [](const Band& band, double v) { return band.theta_hi < v; });
  const std::size_t bi = it == bands.bands.end() ? bands.bands.size() - 1
                                                 : static_cast<std::size_t>(it - bands.bands.begin());
  const Band& band = bands.bands[bi];
  if (band.count == 1) return bands.offsets[bi];
  const double dphi = kTwoPi / band.count;
  const double phi = longitude(x);
  long n = static_cast<long>(std::ceil(phi / dphi)) - 1;
  n = std::clamp(n, 0L, static_cast<long>(band.count) - 1);
  return bands.offsets[bi] + static_cast<std::size_t>(n);
}

RingLayout ScalePartition::sampling() const {
  RingLayout layout;
  if (const auto* g = std::get_if<Greedy>(&layout_)) {
    for (std::size_t k = 0; k < g->centers.size(); ++k) {
      const Vec3& c = g->centers[k];
      layout.add({colatitude(c), longitude(c), 1, g->measures[k]});
    }
    return layout;
  }
  for (const Band& band : std::get<Bands>(layout_).bands) {
    const double phi0 = band.count == 1 ? 0.0 : kPi / band.count;
    layout.add({band.center_theta, phi0, band.count, band.cell_measure});
  }
  return layout;
}

double ScalePartition::total_measure() const {
  if (const auto* g = std::get_if<Greedy>(&layout_)) {
    double s = 0.0;
    for (double m : g->measures) s += m;
    return s;
  }
  double s = 0.0;
  for (const Band& band : std::get<Bands>(layout_).bands) s += band.count * band.cell_measure;
  return s;
}

double ScalePartition::min_measure() const {
  double m = std::numeric_limits<double>::infinity();
  if (const auto* g = std::get_if<Greedy>(&layout_)) {
    for (double v : g->measures) m = std::min(m, v);
    return m;
  }
  for (const Band& band : std::get<Bands>(layout_).bands) m = std::min(m, band.cell_measure);
  return m;
}

double ScalePartition::max_diameter_bound() const {
  if (const auto* g = std::get_if<Greedy>(&layout_)) return 4.0 * g->t;
  double m = 0.0;
  for (const Band& band : std::get<Bands>(layout_).bands) m = std::max(m, band.diameter_bound);
  return m;
}

double ScalePartition::achieved_c0() const { return min_measure() / (target_ * target_); }

bool ScalePartition::maximal_on_candidates() const {
  if (const auto* g = std::get_if<Greedy>(&layout_)) return g->maximal_on_candidates;
  return true;
}

std::size_t ScalePartition::uncovered_grid_nodes() const {
  if (const auto* g = std::get_if<Greedy>(&layout_)) return g->uncovered_grid_nodes;
  return 0;
}

CubatureRule cubature_rule(int m) {
  if (m < 0 || m > 512) throw ParameterError("cubature degree must lie in [0, 512]");
  const int n_theta = (m + 3) / 2;  // ceil((m + 2) / 2)
  const int n_phi = m + 1;
  const GaussLegendre gl = gauss_legendre(n_theta);
  CubatureRule rule;
  rule.degree = m;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(gl.nodes[static_cast<std::size_t>(i)]);
    rule.layout.add({theta, 0.0, n_phi, gl.weights[static_cast<std::size_t>(i)] * kTwoPi / n_phi});
  }
  return rule;
}

}  // namespace mexneedlet
