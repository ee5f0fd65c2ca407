// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mexneedlet/frame_ops.hpp"
#include "mexneedlet/kernel.hpp"
#include "mexneedlet/needlet.hpp"
#include "mexneedlet/spectral_core.hpp"
#include "mexneedlet/sphere_partition.hpp"
#include "mexneedlet/truncation.hpp"

using namespace mexneedlet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const SpectralFilter kM1 = SpectralFilter::mexican(1);
const double kA3 = std::cbrt(2.0);

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome daubechies_ratio() {
  const DaubechiesBounds d = daubechies_bounds(kM1, kA3);
  return {std::abs(d.ratio - 1.0) < 5e-5, "B/A = " + fmt("%.10f", d.ratio)};
}

Outcome calderon() {
  const double c = calderon_constant(kM1);
  return {std::abs(c - 0.25) <= 1e-9, "c = " + fmt("%.12f", c)};
}

Outcome kernel_cross_validation() {
  const KernelComparison k = compare_kernel_methods(kM1, 0.1, 10000);
  const bool ok = k.max_abs_diff <= 9.5e-4 && k.series_max >= 95.0 && k.series_max <= 105.0;
  return {ok, "max diff = " + fmt("%.4e", k.max_abs_diff) + ", max 4 pi h_t = " + fmt("%.6f", k.series_max)};
}

Outcome needlet_tightness() {
  const NeedletFrame nf = build_needlet_frame(SpectralFilter::normalized_cutoff(), -5, 1,
                                              FrequencyConvention::degree);
  if (nf.covered_lo != 1 || nf.covered_hi < 32) return {false, "scales do not cover 1..32"};
  const EmpiricalBounds eb = empirical_frame_bounds(nf.frame, 20, 42, 32);
  const double dev = std::max(std::abs(eb.min - 1.0), std::abs(eb.max - 1.0));
  return {dev <= 1e-8, "max |ratio - 1| = " + fmt("%.3e", dev)};
}

Outcome nearly_tight_trend() {
  // Common window: the one admissible at the finest b.
  const ScaleWindow w = default_scale_window(kM1, kA3, 0.25, 32).window;
  std::ostringstream detail;
  bool ok = true;
  double prev = 0.0;
  bool first = true;
  for (double b : {1.0, 0.5, 0.25}) {
    const SampledFrame frame = sampled_frame(make_frame_spec(kM1, kA3, b, 32, w));
    const EmpiricalBounds eb = empirical_frame_bounds(frame, 20, 42);
    ok = ok && eb.min > 0.0 && (first || eb.ratio < prev);
    detail << (first ? "" : ", ") << "b=" << b << ": " << fmt("%.8f", eb.ratio);
    prev = eb.ratio;
    first = false;
  }
  return {ok, "ratios " + detail.str()};
}

Outcome frequency_truncation() {
  const int L = 32;
  const SampledFrame full = sampled_frame(make_frame_spec(kM1, kA3, 0.5, L));
  std::mt19937_64 rng(42);
  const HarmonicField F = random_mean_zero_field(L, rng);
  const double full_error = measured_truncation_error(full, F, -full.j_min(), full.j_max());

  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int M = 0; M <= 20; ++M) {
    const double v = frequency_bound(kM1, kA3, 1, 1, 2.0, M, 4, 0.0, 1.0).bound_without_C0b;
    monotone = monotone && v < prev;
    prev = v;
  }
  prev = std::numeric_limits<double>::infinity();
  for (int N = 0; N <= 20; ++N) {
    const double v = frequency_bound(kM1, kA3, 1, 1, 2.0, 4, N, 0.0, 1.0).bound_without_C0b;
    monotone = monotone && v < prev;
    prev = v;
  }

  // Fields on degrees 1..4 in a frame window much wider than their adequate window.
  const int Lf = 4;
  const SampledFrame wide = sampled_frame(make_frame_spec(kM1, kA3, 0.5, Lf, ScaleWindow{-26, 6}));
  const ScaleWindow w = scale_window_for(kM1, kA3, 1, Lf, 1e-6);
  const double B_emp = empirical_frame_bounds(wide, 20, 42).max;
  double worst = 0.0;
  double c0_est = 0.0;
  for (int i = 0; i < 10; ++i) {
    const HarmonicField G = random_mean_zero_field(Lf, rng);
    const double e = measured_truncation_error(wide, G, -w.j_min, w.j_max);
    worst = std::max(worst, e / (B_emp * G.norm()));
    const FrequencyBoundReport r = frequency_bound(kM1, kA3, 1, 1, sphere_eigenvalue(Lf), -w.j_min,
                                                   w.j_max, 0.0, G.norm());
    c0_est = std::max(c0_est, std::max(0.0, e - r.bound_without_C0b) / (0.5 * G.norm()));
  }
  const bool ok = full_error == 0.0 && monotone && worst <= 1e-4;
  return {ok, "full-window error = " + fmt("%g", full_error) + ", bound monotone = " +
                  (monotone ? "yes" : "no") + ", max error/(B_emp ||F||) = " + fmt("%.3e", worst) +
                  ", C0_est = " + fmt("%.3e", c0_est)};
}

Outcome spatial_truncation() {
  const double a = kA3;
  const int L = 24;
  const int M = 12;
  const int N = 3;
  const SampledFrame frame = sampled_frame(make_frame_spec(kM1, a, 0.5, L, ScaleWindow{-M, N}));
  // Random Rayleigh quotients sit far below the top of the spectrum on this
  // window, so the upper bound also takes the power-iteration estimate of ||S||.
  const double B_emp = std::max(empirical_frame_bounds(frame, 10, 42).max, frame_operator_norm(frame, 42, 200));
  const SphericalCap cap{{0.0, 0.0, 1.0}, 0.3};
  HarmonicField F = zonal_field(L, cap.center, [](double th) { return std::exp(-th * th / 0.02); });
  F *= 1.0 / F.norm();

  bool decreasing = true;
  bool chain_ok = true;
  double prev = std::numeric_limits<double>::infinity();
  std::ostringstream detail;
  for (double c : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const SpatialTruncationReport r =
        spatial_truncation_report(frame, a, F, cap, [c](int) { return c; }, 3.0, M, N, B_emp);
    decreasing = decreasing && r.complement_energy < prev;
    chain_ok = chain_ok && r.complement_norm * r.complement_norm <= B_emp * r.complement_energy * (1 + 1e-12);
    detail << (prev == std::numeric_limits<double>::infinity() ? "" : ", ") << fmt("%.3e", r.complement_energy);
    prev = r.complement_energy;
  }
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10; ++i) {
    const HarmonicField G = random_mean_zero_field(L, rng);
    const SpatialTruncationReport r =
        spatial_truncation_report(frame, a, G, cap, [](int) { return 1.0; }, 3.0, M, N, B_emp);
    chain_ok = chain_ok && r.complement_norm * r.complement_norm <= B_emp * r.complement_energy * (1 + 1e-12);
  }
  return {decreasing && chain_ok, "complement energies " + detail.str() + "; norm chain with B = " + fmt("%.6f", B_emp) + (chain_ok ? " holds" : " violated")};
}

Outcome tail_inequalities() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tail_bad = 0;
  int bracket_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const double M = 0.5 + 1e-6 + 19.5 * u(rng);
    const double b = 0.01 + 0.99 * u(rng);
    const double a = 1.01 + 1.99 * u(rng);
    const TailBound t = tail_bound_lhs_rhs(M, b, a);
    if (!(t.lhs <= t.rhs)) ++tail_bad;
  }
  for (int i = 0; i < 50; ++i) {
    const double N = 1.0 + 49.0 * u(rng);
    const double r = 1.0 + 9.0 * u(rng);
    const int l = 1 + static_cast<int>(200.0 * u(rng)) % 200;
    const double a = std::pow(2.0, 1.0 / 6.0 + (5.0 / 6.0) * u(rng));
    if (!crossing_index(N, r, l, a).in_bracket) ++bracket_bad;
  }
  return {tail_bad == 0 && bracket_bad == 0,
          std::to_string(tail_bad) + " tail violations, " + std::to_string(bracket_bad) + " bracket violations"};
}

Outcome partition_axioms() {
  int bad = 0;
  int partitions = 0;
  double min_c0 = std::numeric_limits<double>::infinity();
  for (double a : {kA3, 2.0}) {
    for (double b : {0.25, 0.5, 1.0}) {
      for (int j = -60; j <= 10; ++j) {
        const double d = b * std::pow(a, j);
        if (d < kMinCellDiameter || d > kTwoPi) continue;
        const ScalePartition p = build_partition(j, a, b);
        ++partitions;
        if (std::abs(p.total_measure() - kFourPi) > 1e-10) ++bad;
        if (p.max_diameter_bound() > d * (1 + 1e-12)) ++bad;
        if (d <= kMeasureScaleThreshold) min_c0 = std::min(min_c0, p.achieved_c0());
      }
    }
  }
  for (double t : {0.3, 0.785}) {
    const ScalePartition g = greedy_ball_partition(t, 2000, 200);
    ++partitions;
    if (std::abs(g.total_measure() - kFourPi) > 1e-3) ++bad;
    if (g.uncovered_grid_nodes() != 0) ++bad;
    min_c0 = std::min(min_c0, g.min_measure() / (t * t));
  }
  int cub_bad = 0;
  for (int m : {2, 5, 8, 16, 31}) {
    const CubatureRule rule = cubature_rule(m);
    const int Lx = m + 2;
    std::vector<double> sums(sh_count(Lx), 0.0);
    std::vector<double> y(sh_count(Lx));
    for (std::size_t i = 0; i < rule.layout.size(); ++i) {
      real_harmonics(Lx, rule.layout.node(i), y);
      for (std::size_t p = 0; p < y.size(); ++p) sums[p] += rule.layout.weight(i) * y[p];
    }
    double exact = std::abs(sums[0] - std::sqrt(kFourPi));
    for (std::size_t p = 1; p < sh_count(m); ++p) exact = std::max(exact, std::abs(sums[p]));
    double beyond = 0.0;
    for (std::size_t p = sh_count(m); p < sh_count(Lx); ++p) beyond = std::max(beyond, std::abs(sums[p]));
    if (exact > 1e-10 || beyond <= 1e-10) ++cub_bad;
  }
  const bool ok = bad == 0 && cub_bad == 0 && min_c0 > 0.0;
  return {ok, std::to_string(partitions) + " partitions, " + std::to_string(bad) + " axiom failures, min c0 = " +
                  fmt("%.4f", min_c0) + ", " + std::to_string(cub_bad) + " cubature failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 daubechies ratio", daubechies_ratio},
      {"2 calderon constant", calderon},
      {"3 kernel cross-validation", kernel_cross_validation},
      {"4 needlet tightness", needlet_tightness},
      {"5 nearly-tight trend", nearly_tight_trend},
      {"6 frequency truncation", frequency_truncation},
      {"7 spatial truncation", spatial_truncation},
      {"8 tail inequalities", tail_inequalities},
      {"9 partition axioms", partition_axioms},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
