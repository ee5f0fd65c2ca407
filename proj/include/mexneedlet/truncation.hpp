#pragma once

#include <functional>

#include "mexneedlet/frame_ops.hpp"

namespace mexneedlet {

/// M_J = max_{s > 0} |s^J f(s)|, f in eigenvalue form.
double moment_constant(const SpectralFilter& filter, int J);

/// sup_{s > 0} |f(s) / s^l|, the sup norm of f_0 in f(s) = s^l f_0(s).
double reduced_sup_norm(const SpectralFilter& filter, int l);

struct FrequencyBoundReport {
  int M = 0;
  int N = 0;
  double L = 0.0;
  int l = 1;
  int J = 1;
  double a = 2.0;
  double B_a = 0.0;
  double f0_sup = 0.0;
  double c_prime_L = 0.0;
  double C_prime_J = 0.0;
  double M_J = 0.0;
  double tail_norm = 0.0;
  double F_norm = 0.0;
  double bound_without_C0b = 0.0;
  double measured_error = 0.0;
};

/// Bound part of the frequency truncation estimate:
///   (c'_L / a^{4Ml} + C'_J / a^{4NJ}) ||F|| + 2 B_a tail_norm
/// with c'_L = L^{2l} ||f_0||_inf^2 / (a^{4l} - 1) and
/// C'_J = M_J^2 / [(a^{4J} - 1) lambda_1^{2J}], lambda_1 = 2.
/// measured_error is left at 0.
FrequencyBoundReport frequency_bound(const SpectralFilter& filter, double a, int l, int J, double L,
                                     int M, int N, double tail_norm, double F_norm);

/// ||(I - P_[0,L]) F|| = sqrt(sum over l(l+1) > L of coeffs^2).
double spectral_tail_norm(const HarmonicField& field, double L);

/// ||SF - S_{[-M,N]} F||, S over the full frame window. Throws ScaleRangeError
/// when [-M, N] is not inside the window.
double measured_truncation_error(const SampledFrame& frame, const HarmonicField& field, int M,
                                 int N);

/// Closed geodesic cap.
struct SphericalCap {
  Vec3 center{0.0, 0.0, 1.0};
  double radius = 0.0;

  double distance(const Vec3& x) const;
  bool contains(const Vec3& x) const { return distance(x) == 0.0; }
  double area() const { return cap_area(radius); }
};

using ScaleConstants = std::function<double(int j)>;

/// I = {(j, k) : d(x_{j,k}, cap) <= (c_j + 1) a^j} over the scale window.
FrameSelection spatial_index_set(double a, ScaleWindow window, const SphericalCap& cap,
                                 ScaleConstants c);

/// ||chi F||^2 for the cap indicator chi, exact for band-limited F.
double cap_norm_squared(const HarmonicField& field, const SphericalCap& cap);

struct SpatialTruncationReport {
  double measured_error = 0.0;   // ||S_{[-M,N]} F - S_I F||
  double complement_energy = 0.0;  // <S_{I^c} F, F>
  double structural_factor = 0.0;  // [mu(Gamma) sum_j a^{-2j} c_j^{2 - 2I}]^{1/2} ||chi F||
  double leakage = 0.0;            // B_emp ||(1 - chi) F||
  double ratio = 0.0;              // measured / structural
  double chi_norm = 0.0;
  double complement_norm = 0.0;
};

/// Spatial truncation on the window [-M, N] of the frame; I^c is the part of the
/// window outside the spatial index set.
SpatialTruncationReport spatial_truncation_report(const SampledFrame& frame, double a,
                                                  const HarmonicField& field,
                                                  const SphericalCap& cap, ScaleConstants c,
                                                  double I_decay, int M, int N, double B_emp);

}  // namespace mexneedlet
