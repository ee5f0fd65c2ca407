#pragma once

#include <span>

#include "mexneedlet/spectral_filter.hpp"

namespace mexneedlet {

/// Extremes of the Daubechies sum g over one multiplicative period.
struct DaubechiesBounds {
  double a = 2.0;
  double lower = 0.0;            // A_a
  double upper = 0.0;            // B_a
  double ratio = 1.0;            // B_a / A_a
  double reference_level = 0.0;  // c / (2 ln a)
  double argmin_lambda = 1.0;
  double argmax_lambda = 1.0;
};

/// c = int_0^inf |f(t)|^2 dt / t, with f in eigenvalue form.
/// Throws DivergenceError when f(0) != 0.
double calderon_constant(const SpectralFilter& filter);

/// g(lambda) = sum over all j in Z of |f(a^{2j} lambda)|^2.
double daubechies_sum(const SpectralFilter& filter, double a, double lambda);

/// g_{M,N}(lambda) = sum_{j=-M}^{N} |f(a^{2j} lambda)|^2.
double truncated_daubechies_sum(const SpectralFilter& filter, double a, double lambda, int M, int N);

/// A_a = min g and B_a = max g, from a log-uniform scan of [1, a^2) followed by
/// Brent refinement of the extreme grid cells. g(a^2 lambda) = g(lambda), so the
/// bounds hold for every lambda > 0.
DaubechiesBounds daubechies_bounds(const SpectralFilter& filter, double a, int grid_points = 256);

/// Laplace-Beltrami eigenvalue l(l+1) on S^2.
constexpr double sphere_eigenvalue(int l) { return static_cast<double>(l) * (l + 1); }

/// Dimension 2l+1 of the degree-l spherical harmonics.
constexpr int sphere_multiplicity(int l) { return 2 * l + 1; }

/// Legendre polynomial P_l(x) by the three-term recurrence.
double legendre_eval(int l, double x);

/// P_0(x), ..., P_L(x) into out (size L+1).
void legendre_table(int L, double x, std::span<double> out);

}  // namespace mexneedlet
