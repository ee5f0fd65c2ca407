#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "mexneedlet/error.hpp"
#include "mexneedlet/harmonic_field.hpp"
#include "mexneedlet/sphere_partition.hpp"

using namespace mexneedlet;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Largest pairwise distance among sample points of a band cell (corners and edge midpoints).
double sampled_diameter(const BandRect& r) {
  std::vector<Vec3> pts;
  const double phi_hi = std::min(r.phi_hi, r.phi_lo + kTwoPi);
  for (int i = 0; i <= 6; ++i) {
    const double th = r.theta_lo + (r.theta_hi - r.theta_lo) * i / 6.0;
    for (int k = 0; k <= 6; ++k) pts.push_back(from_angles(th, r.phi_lo + (phi_hi - r.phi_lo) * k / 6.0));
  }
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = i + 1; k < pts.size(); ++k) d = std::max(d, geodesic_distance(pts[i], pts[k]));
  }
  return d;
}

bool rect_contains(const BandRect& r, const Vec3& x) {
  const double th = colatitude(x);
  const double ph = longitude(x);
  return th >= r.theta_lo - 1e-12 && th <= r.theta_hi + 1e-12 && ph >= r.phi_lo - 1e-12 &&
         ph <= r.phi_hi + 1e-12;
}

}  // namespace

TEST_CASE("band partition axioms", "[partition][property]") {
  for (double a : {std::cbrt(2.0), 2.0}) {
    for (double b : {0.25, 0.5, 1.0}) {
      for (int j = -40; j <= 4; ++j) {
        const double d = b * std::pow(a, j);
        if (d < 0.02 || d > kTwoPi) continue;
        INFO("a = " << a << ", b = " << b << ", j = " << j);
        const ScalePartition p = build_partition(j, a, b);
        CHECK(p.target() == d);
        CHECK_THAT(p.total_measure(), WithinRel(kFourPi, 1e-12));
        CHECK(p.max_diameter_bound() <= d * (1 + 1e-12));
        if (d <= kMeasureScaleThreshold) CHECK(p.achieved_c0() >= 0.05);
        const std::size_t n = p.size();
        const std::size_t stride = std::max<std::size_t>(1, n / 50);
        for (std::size_t k = 0; k < n; k += stride) {
          const Cell c = p.cell(k);
          CHECK(p.locate(c.center) == k);
          const BandRect& r = std::get<BandRect>(c.geometry);
          CHECK(rect_contains(r, c.center));
          CHECK(sampled_diameter(r) <= c.diameter_bound + 1e-12);
          CHECK(c.diameter_bound <= d * (1 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("finest admissible scales", "[partition]") {
  const double a = std::cbrt(2.0);
  const ScalePartition p = build_partition(-23, a, 0.25);
  CHECK(p.target() >= kMinCellDiameter);
  CHECK_THAT(p.total_measure(), WithinRel(kFourPi, 1e-10));
  CHECK(p.max_diameter_bound() <= p.target() * (1 + 1e-12));
  CHECK(p.achieved_c0() >= 0.05);
  CHECK_THROWS_AS(build_partition(-24, a, 0.25), SizeOverflowError);
  CHECK_THROWS_AS(build_partition(0, 1.0, 0.5), ParameterError);
  CHECK_THROWS_AS(build_partition(0, 2.0, 0.0), ParameterError);
  CHECK_THROWS_AS(build_partition(0, 2.0, 1.5), ParameterError);
}

TEST_CASE("coarse scale is the whole sphere", "[partition]") {
  const ScalePartition p = build_partition(2, 2.0, 1.0);
  REQUIRE(p.size() == 1);
  CHECK_THAT(p.cell(0).measure, WithinRel(kFourPi, 1e-15));
  CHECK(p.locate(from_angles(2.0, 1.0)) == 0);
}

TEST_CASE("cell measures match Monte Carlo frequencies", "[partition][property]") {
  const ScalePartition p = build_partition(0, 2.0, 0.9);
  const std::size_t n = p.size();
  REQUIRE(n > 4);
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  const int samples = 200000;
  std::vector<int> hits(n, 0);
  for (int i = 0; i < samples; ++i) ++hits[p.locate(normalized({g(rng), g(rng), g(rng)}))];
  for (std::size_t k = 0; k < n; ++k) {
    const double pk = p.cell(k).measure / kFourPi;
    const double sigma = std::sqrt(samples * pk * (1 - pk));
    CHECK(std::abs(hits[k] - samples * pk) <= 3.5 * sigma);
  }
}

TEST_CASE("locate ties go to the lower index", "[partition]") {
  const ScalePartition p = build_partition(0, 2.0, 0.5);
  const Cell c1 = p.cell(1);
  const BandRect& r = std::get<BandRect>(c1.geometry);
  // The shared edge with the north cap belongs to the cap.
  CHECK(p.locate(from_angles(r.theta_lo, 0.3)) == 0);
  const Vec3 corner = from_angles(0.5 * (r.theta_lo + r.theta_hi), r.phi_hi);
  CHECK(p.locate(corner) == 1);
}

TEST_CASE("sampling layout matches the cells", "[partition]") {
  const ScalePartition p = build_partition(-3, 2.0, 0.5);
  const RingLayout s = p.sampling();
  REQUIRE(s.size() == p.size());
  for (std::size_t k = 0; k < p.size(); k += 7) {
    const Cell c = p.cell(k);
    CHECK(geodesic_distance(s.node(k), c.center) < 1e-12);
    CHECK(s.weight(k) == c.measure);
  }
  CHECK_THAT(s.total_weight(), WithinRel(kFourPi, 1e-12));
}

TEST_CASE("greedy ball partition", "[partition][greedy]") {
  const double t = 0.785;
  const ScalePartition p = greedy_ball_partition(t, 2000, 200);
  CHECK(p.is_greedy());
  CHECK(p.size() >= 4);
  CHECK(p.size() <= 30);
  CHECK(p.maximal_on_candidates());
  CHECK(p.uncovered_grid_nodes() == 0);
  CHECK_THAT(p.total_measure(), WithinRel(kFourPi, 1e-12));
  CHECK(p.target() == 4 * t);
  for (const Cell& c : p.cells()) {
    CHECK(c.measure >= cap_area(t) * (1 - 1e-2));
    CHECK(c.measure <= cap_area(2 * t) * (1 + 1e-2));
  }
  const std::vector<Cell> cells = p.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(p.locate(cells[i].center) == i);
    for (std::size_t k = i + 1; k < cells.size(); ++k) {
      CHECK(geodesic_distance(cells[i].center, cells[k].center) >= 2 * t);
    }
  }
  SECTION("smaller radius gives more cells") {
    const ScalePartition q = greedy_ball_partition(0.3, 2000, 100);
    CHECK(q.size() > p.size());
    CHECK(q.uncovered_grid_nodes() == 0);
  }
  CHECK_THROWS_AS(greedy_ball_partition(0.0, 100), ParameterError);
  CHECK_THROWS_AS(greedy_ball_partition(0.5, 0), ParameterError);
}

TEST_CASE("Fibonacci lattice", "[partition]") {
  const std::vector<Vec3> pts = fibonacci_lattice(500);
  REQUIRE(pts.size() == 500);
  double zsum = 0.0;
  for (const Vec3& x : pts) {
    CHECK_THAT(norm(x), WithinAbs(1.0, 1e-14));
    zsum += x.z;
  }
  CHECK(std::abs(zsum) < 1e-10);
  CHECK_THROWS_AS(fibonacci_lattice(0), ParameterError);
}

TEST_CASE("cubature exactness", "[cubature][property]") {
  for (int m : {0, 1, 4, 8, 15, 32}) {
    INFO("m = " << m);
    const CubatureRule rule = cubature_rule(m);
    const int Lx = m + 2;
    std::vector<double> sums(sh_count(Lx), 0.0);
    std::vector<double> y(sh_count(Lx));
    for (std::size_t i = 0; i < rule.layout.size(); ++i) {
      real_harmonics(Lx, rule.layout.node(i), y);
      for (std::size_t p = 0; p < y.size(); ++p) sums[p] += rule.layout.weight(i) * y[p];
    }
    CHECK_THAT(sums[0], WithinAbs(std::sqrt(kFourPi), 1e-12));
    double exact_err = 0.0;
    for (std::size_t p = 1; p < sh_count(m); ++p) exact_err = std::max(exact_err, std::abs(sums[p]));
    CHECK(exact_err < 1e-12);
    double beyond = 0.0;
    for (std::size_t p = sh_count(m); p < sh_count(Lx); ++p) beyond = std::max(beyond, std::abs(sums[p]));
    CHECK(beyond > 1e-3);
  }
  SECTION("degree 8 rule integrates Y_44^2") {
    const CubatureRule rule = cubature_rule(8);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.layout.size(); ++i) {
      const double v = real_harmonics(4, rule.layout.node(i))[sh_index(4, 4)];
      s += rule.layout.weight(i) * v * v;
    }
    CHECK_THAT(s, WithinAbs(1.0, 1e-13));
  }
  CHECK(cubature_rule(10).layout.size() == 6 * 11);
  CHECK_THROWS_AS(cubature_rule(-1), ParameterError);
  CHECK_THROWS_AS(cubature_rule(513), ParameterError);
}
