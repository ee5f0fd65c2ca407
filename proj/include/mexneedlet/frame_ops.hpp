#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mexneedlet/harmonic_field.hpp"
#include "mexneedlet/sampled_frame.hpp"
#include "mexneedlet/spectral_core.hpp"
#include "mexneedlet/sphere_partition.hpp"

namespace mexneedlet {

/// Closed range of scale indices j.
struct ScaleWindow {
  int j_min = 0;
  int j_max = 0;
};

/// Smallest window with g_{window}(lambda_l) >= (1 - eps) g(lambda_l) for every
/// l_lo <= l <= l_hi. Half of eps is allowed on each tail.
ScaleWindow scale_window_for(const SpectralFilter& filter, double a, int l_lo, int l_hi,
                             double eps = 1e-6);

/// scale_window_for(1..L_max), with j_min raised until b a^{j_min} is at least
/// kMinCellDiameter. `clipped` reports whether that happened.
struct DefaultWindow {
  ScaleWindow window;
  ScaleWindow unclipped;
  bool clipped = false;
};
DefaultWindow default_scale_window(const SpectralFilter& filter, double a, double b, int L_max,
                                   double eps = 1e-6);

/// Filter, dilation, fineness, scale window and per-scale partitions.
struct FrameSpec {
  SpectralFilter filter = SpectralFilter::mexican(1);
  double a = 2.0;
  double b = 0.5;
  int j_min = 0;
  int j_max = 0;
  int L_max = 0;
  std::vector<ScalePartition> partitions;  // partitions[j - j_min]

  const ScalePartition& partition(int j) const;
  /// Degree multiplier f(a^{2j} lambda_l), l = 0..L_max (zero at l = 0).
  std::vector<double> multiplier(int j) const;
};

/// Builds the spec; without a window the default window is used.
FrameSpec make_frame_spec(const SpectralFilter& filter, double a, double b, int L_max,
                          std::optional<ScaleWindow> window = std::nullopt);

/// The spec's frame on the degree <= L_max subspace.
SampledFrame sampled_frame(const FrameSpec& spec);

/// phi_{j,k} = mu(E_{j,k})^{1/2} sum_l f(a^{2j} lambda_l) sum_q Y_{lq}(x_{j,k}) Y_{lq}.
HarmonicField frame_element(const FrameSpec& spec, int j, std::size_t k);

/// <F, phi_{j,k}> for all (j, k). Throws BandLimitError when F.L > L_max.
FrameCoefficients analyze(const SampledFrame& frame, const HarmonicField& field);

/// SF = sum <F, phi> phi.
HarmonicField summation_operator(const SampledFrame& frame, const HarmonicField& field);

/// <SF, F> / <F, F>. Throws ZeroFieldError for F = 0.
double rayleigh_quotient(const SampledFrame& frame, const HarmonicField& field);

/// Exact quadratic form sum_j ||f(a^{2j} Delta) F||^2 over the spec window.
double spectral_quadratic_form(const FrameSpec& spec, const HarmonicField& field);

struct EmpiricalBounds {
  double min = 0.0;
  double max = 0.0;
  double ratio = 1.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Min and max Rayleigh quotient over random mean-zero unit fields drawn from
/// mt19937_64(seed). Fields have degree <= field_band_limit (the frame band
/// limit when negative).
EmpiricalBounds empirical_frame_bounds(const SampledFrame& frame, int trials, std::uint64_t seed,
                                       int field_band_limit = -1);

/// Largest eigenvalue of S on mean-zero fields of degree <= L (the frame band
/// limit when negative), by power iteration from a seeded random start. Random
/// Rayleigh quotients concentrate well below it once the frame is far from tight.
double frame_operator_norm(const SampledFrame& frame, std::uint64_t seed, int max_iterations = 500,
                           int field_band_limit = -1);

/// max_j |f(a^{2j} lambda_{L_max + 1})|: the filter weight left beyond the band limit
/// at the finest scale.
double band_limit_residual(const FrameSpec& spec);

}  // namespace mexneedlet
