#pragma once

#include <string>
#include <vector>

#include "mexneedlet/spectral_filter.hpp"

namespace mexneedlet {

/// Which argument the filter receives in the eigen-series.
enum class KernelConvention {
  laplacian,  // f(t^2 l(l+1)), the operator f(t^2 Delta)
  degree,     // g(t l), the first-order operator sum_l l P_l
};

enum class KernelMethod { series, gaussian, automatic };

inline constexpr int kMaxSeriesDegree = 1'000'000;
inline constexpr double kDefaultCrossover = 0.2;

/// Truncation chosen for one series evaluation.
struct SeriesTruncation {
  int degree = 0;          // last degree summed
  double tail_bound = 0.0; // certified bound on sum_{l > degree} (2l+1)|f|
};

/// Smallest degree whose certified tail is below tol. For the Mexican family the
/// tail is bounded by the integral test, which is exact in closed form through
/// the upper incomplete gamma function once (2l+1) f(...) is decreasing.
/// Throws SeriesOverflowError past kMaxSeriesDegree.
SeriesTruncation series_truncation(const SpectralFilter& filter, double t, double tol,
                                   KernelConvention convention = KernelConvention::laplacian);

/// 4 pi h_t(cos theta) = sum_l (2l+1) f(t^2 l(l+1)) P_l(cos theta), to within tol.
double kernel_series(const SpectralFilter& filter, double t, double cos_theta, double tol,
                     KernelConvention convention = KernelConvention::laplacian);

/// Small-t approximation of 4 pi h_t(cos theta) for f(s) = s e^{-s}.
/// Throws UnsupportedFilterError for every other filter.
double kernel_gaussian_approx(const SpectralFilter& filter, double t, double theta);

/// Method kernel_auto picks for (filter, t).
KernelMethod auto_method(const SpectralFilter& filter, double t,
                         double t_cross = kDefaultCrossover);

/// Gaussian approximation for mexican:r=1 below t_cross, eigen-series otherwise.
double kernel_auto(const SpectralFilter& filter, double t, double cos_theta, double tol,
                   double t_cross = kDefaultCrossover);

struct KernelProfileOptions {
  double tol = 1e-10;
  KernelConvention convention = KernelConvention::laplacian;
  double t_cross = kDefaultCrossover;
};

/// 4 pi h_t(cos theta) on a uniform grid over [-pi, pi].
struct KernelProfile {
  double t = 0.0;
  std::string filter;
  KernelMethod requested = KernelMethod::series;
  std::vector<double> thetas;
  std::vector<double> values;
  std::vector<KernelMethod> methods;  // method actually used at each point
};

/// Grid values are exactly even: values[i] == values[n-1-i].
KernelProfile kernel_profile(const SpectralFilter& filter, double t, int n_theta,
                             KernelMethod method, const KernelProfileOptions& options = {});

/// Series and Gaussian profiles on the same grid, for mexican:r=1.
struct KernelComparison {
  int n_theta = 0;
  double max_abs_diff = 0.0;
  double series_max = 0.0;
  double gaussian_max = 0.0;
};

KernelComparison compare_kernel_methods(const SpectralFilter& filter, double t, int n_theta,
                                        const KernelProfileOptions& options = {});

/// Number of sign changes along a profile, ignoring exact zeros.
int sign_changes(const std::vector<double>& values);

/// Lower-case method label used in CSV output.
std::string method_name(KernelMethod method);

KernelMethod parse_method(const std::string& text);

}  // namespace mexneedlet
