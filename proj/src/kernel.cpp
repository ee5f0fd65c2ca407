#include "mexneedlet/kernel.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "mexneedlet/error.hpp"
#include "mexneedlet/geometry.hpp"

namespace mexneedlet {

namespace {

double series_weight(const SpectralFilter& filter, double t, int l, KernelConvention convention) {
  if (convention == KernelConvention::laplacian) {
    return filter.at_eigenvalue(t * t * static_cast<double>(l) * (l + 1));
  }
  return filter.at_frequency(t * l);
}

// Eigenvalue-variable argument at degree l.
double series_argument(double t, double l, KernelConvention convention) {
  return convention == KernelConvention::laplacian ? t * t * l * (l + 1) : t * t * l * l;
}

// Integral-test bound on sum_{l > L} (2l+1)|f| for the Mexican family. With
// s(x) the eigenvalue argument, (2x+1) dx = ds / t^2 in the laplacian convention
// and <= (1 + 1/(2L)) ds / t^2 in the degree convention.
double mexican_tail(int r, double t, int L, KernelConvention convention) {
  const double s = series_argument(t, L, convention);
  double jacobian = 1.0 / (t * t);
  if (convention == KernelConvention::degree) jacobian *= 1.0 + 0.5 / std::max(L, 1);
  return jacobian * boost::math::tgamma(static_cast<double>(r + 1), s);
}

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError("kernel scale t must be > 0");
}

}  // namespace

SeriesTruncation series_truncation(const SpectralFilter& filter, double t, double tol,
                                   KernelConvention convention) {
  require_positive_t(t);
  if (!(tol > 0.0)) throw ParameterError("series tolerance must be > 0");

  if (filter.compact_support()) {
    // Last degree with the argument inside the support; the tail is exactly zero.
    const double hi = convention == KernelConvention::laplacian ? filter.eigen_support().hi
                                                               : filter.support().hi;
    const double bound = convention == KernelConvention::laplacian
                             ? 0.5 * (std::sqrt(1.0 + 4.0 * hi / (t * t)) - 1.0)
                             : hi / t;
    if (bound > kMaxSeriesDegree) throw SeriesOverflowError("series degree exceeds 1e6");
    auto native_argument = [&](int l) {
      return convention == KernelConvention::laplacian ? t * t * l * (l + 1.0) : t * l;
    };
    int L = static_cast<int>(bound) + 1;
    while (L > 0 && native_argument(L) >= hi) --L;
    return {L, 0.0};
  }

  const int r = filter.mexican_order();
  // (2l+1) f(s(l)) is decreasing once s >= r + 1.
  const double s_mono = r + 1.0;
  double l_mono = convention == KernelConvention::laplacian
                      ? 0.5 * (std::sqrt(1.0 + 4.0 * s_mono / (t * t)) - 1.0)
                      : std::sqrt(s_mono) / t;
  if (l_mono > kMaxSeriesDegree) throw SeriesOverflowError("series degree exceeds 1e6");
  int lo = static_cast<int>(std::ceil(l_mono));
  if (mexican_tail(r, t, lo, convention) < tol) return {lo, mexican_tail(r, t, lo, convention)};

  int hi = std::max(lo, 1);
  while (mexican_tail(r, t, hi, convention) >= tol) {
    if (hi >= kMaxSeriesDegree) throw SeriesOverflowError("series degree exceeds 1e6");
    lo = hi;
    hi = std::min(2 * hi, kMaxSeriesDegree);
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (mexican_tail(r, t, mid, convention) < tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, mexican_tail(r, t, hi, convention)};
}

double kernel_series(const SpectralFilter& filter, double t, double cos_theta, double tol,
                     KernelConvention convention) {
  const SeriesTruncation trunc = series_truncation(filter, t, tol, convention);
  const double x = std::clamp(cos_theta, -1.0, 1.0);
  double p_prev = 1.0;
  double p = x;
  double sum = series_weight(filter, t, 0, convention);
  if (trunc.degree >= 1) sum += 3.0 * series_weight(filter, t, 1, convention) * x;
  for (int l = 1; l < trunc.degree; ++l) {
    const double next = ((2 * l + 1) * x * p - l * p_prev) / (l + 1);
    p_prev = p;
    p = next;
    sum += (2.0 * (l + 1) + 1.0) * series_weight(filter, t, l + 1, convention) * p;
  }
  return sum;
}

double kernel_gaussian_approx(const SpectralFilter& filter, double t, double theta) {
  if (!filter.is_mexican(1)) {
    throw UnsupportedFilterError("Gaussian kernel approximation is only available for mexican:r=1");
  }
  require_positive_t(t);
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double t6 = t4 * t2;
  const double t8 = t4 * t4;
  const double h = theta * theta / 4.0;
  const double p = 1.0 + t2 / 3.0 + t4 / 15.0 + 4.0 * t6 / 315.0 + t8 / 315.0 +
                   h * (1.0 / 3.0 + 2.0 * t2 / 15.0 + 4.0 * t4 / 105.0 + 4.0 * t6 / 315.0);
  const double q = 1.0 / 3.0 + 2.0 * t2 / 15.0 + 4.0 * t4 / 105.0 + 4.0 * t6 / 315.0 +
                   h * (2.0 / 15.0 + 8.0 * t2 / 105.0 + 4.0 * t4 / 105.0);
  const double u = theta * theta / (4.0 * t2);
  return std::exp(-u) / t2 * ((1.0 - u) * p - t2 * q);
}

KernelMethod auto_method(const SpectralFilter& filter, double t, double t_cross) {
  return filter.is_mexican(1) && t < t_cross ? KernelMethod::gaussian : KernelMethod::series;
}

double kernel_auto(const SpectralFilter& filter, double t, double cos_theta, double tol,
                   double t_cross) {
  if (auto_method(filter, t, t_cross) == KernelMethod::gaussian) {
    return kernel_gaussian_approx(filter, t, std::acos(std::clamp(cos_theta, -1.0, 1.0)));
  }
  return kernel_series(filter, t, cos_theta, tol);
}

KernelProfile kernel_profile(const SpectralFilter& filter, double t, int n_theta,
                             KernelMethod method, const KernelProfileOptions& options) {
  require_positive_t(t);
  if (n_theta < 2) throw ParameterError("kernel profile needs at least 2 grid points");
  KernelProfile profile;
  profile.t = t;
  profile.filter = filter.name();
  profile.requested = method;
  const auto n = static_cast<std::size_t>(n_theta);
  profile.thetas.resize(n);
  profile.values.resize(n);
  profile.methods.resize(n);

  KernelMethod used = method;
  if (method == KernelMethod::automatic) used = auto_method(filter, t, options.t_cross);
  if (used == KernelMethod::gaussian && !filter.is_mexican(1)) {
    throw UnsupportedFilterError("Gaussian kernel approximation is only available for mexican:r=1");
  }
  if (used == KernelMethod::gaussian && options.convention != KernelConvention::laplacian) {
    throw ParameterError("Gaussian approximation is defined for the laplacian convention only");
  }

  // Fill the non-positive half and mirror it, so the grid and values are exactly even.
  for (std::size_t i = 0; 2 * i < n; ++i) {
    const double theta = -kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(n - 1);
    const double value = used == KernelMethod::gaussian
                             ? kernel_gaussian_approx(filter, t, theta)
                             : kernel_series(filter, t, std::cos(theta), options.tol,
                                             options.convention);
    const std::size_t mirror = n - 1 - i;
    profile.thetas[i] = theta;
    profile.thetas[mirror] = -theta;
    profile.values[i] = value;
    profile.values[mirror] = value;
    profile.methods[i] = used;
    profile.methods[mirror] = used;
  }
  if (n % 2 == 1) {
    const std::size_t mid = n / 2;
    profile.thetas[mid] = 0.0;
    profile.values[mid] = used == KernelMethod::gaussian
                              ? kernel_gaussian_approx(filter, t, 0.0)
                              : kernel_series(filter, t, 1.0, options.tol, options.convention);
  }
  return profile;
}

std::string method_name(KernelMethod method) {
  switch (method) {
    case KernelMethod::series:
      return "series";
    case KernelMethod::gaussian:
      return "gaussian";
    case KernelMethod::automatic:
      return "auto";
  }
  return {};
}

KernelMethod parse_method(const std::string& text) {
  if (text == "series") return KernelMethod::series;
  if (text == "gaussian") return KernelMethod::gaussian;
  if (text == "auto") return KernelMethod::automatic;
  throw ParameterError("unknown kernel method '" + text + "'");
}


KernelComparison compare_kernel_methods(const SpectralFilter& filter, double t, int n_theta,
                                        const KernelProfileOptions& options) {
  const KernelProfile series = kernel_profile(filter, t, n_theta, KernelMethod::series, options);
  const KernelProfile gauss = kernel_profile(filter, t, n_theta, KernelMethod::gaussian, options);
  KernelComparison out;
  out.n_theta = n_theta;
  out.series_max = *std::max_element(series.values.begin(), series.values.end());
  out.gaussian_max = *std::max_element(gauss.values.begin(), gauss.values.end());
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    out.max_abs_diff = std::max(out.max_abs_diff, std::abs(series.values[i] - gauss.values[i]));
  }
  return out;
}

int sign_changes(const std::vector<double>& values) {
  int changes = 0;
  double last = 0.0;
  for (double v : values) {
    if (v == 0.0) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace mexneedlet
