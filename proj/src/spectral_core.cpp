#include "mexneedlet/spectral_core.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

namespace {

constexpr double kTailTolerance = 1e-18;
constexpr long kMaxDilationSteps = 10'000'000;

void require_dilation(double a) {
  if (!(a > 1.0) || !std::isfinite(a)) throw ParameterError("dilation a must be > 1");
}

// Sums |f(a^{2j} lambda)|^2 walking away from the peak in one direction until the
// argument is past the peak (or out of the support) and two consecutive terms
// are negligible against the running total.
double tail_sum(const SpectralFilter& filter, double log_a2, double log_lambda, long j_start,
                int direction, double running) {
  const double log_peak = std::log(filter.eigen_peak());
  const Interval support = filter.eigen_support();
  double sum = 0.0;
  int small_run = 0;
  for (long step = 0;; ++step) {
    if (step > kMaxDilationSteps) throw ParameterError("dilation a too close to 1");
    const long j = j_start + direction * step;
    const double log_arg = j * log_a2 + log_lambda;
    const double arg = std::exp(log_arg);
    const double v = filter.at_eigenvalue(arg);
    const double term = v * v;
    sum += term;

    const bool past_peak = direction > 0 ? log_arg > log_peak : log_arg < log_peak;
    if (filter.compact_support()) {
      const bool outside = direction > 0 ? arg >= support.hi : arg <= support.lo;
      if (outside) break;
      continue;
    }
    if (past_peak && term <= kTailTolerance * (running + sum)) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return sum;
}

}  // namespace

double calderon_constant(const SpectralFilter& filter) {
  if (filter.vanishing_order() == 0) {
    throw DivergenceError("Calderon integral diverges at 0 for a filter with f(0) != 0");
  }
  // t = e^u turns dt/t into du.
  auto integrand = [&](double u) {
    const double v = filter.at_eigenvalue(std::exp(u));
    return v * v;
  };
  double lo = -40.0;
  double hi = 40.0;
  if (filter.compact_support()) {
    const Interval s = filter.eigen_support();
    lo = std::log(s.lo);
    hi = std::log(s.hi);
  }
  // Split at the peak so both sides are resolved independently.
  const double mid = std::clamp(std::log(std::max(filter.eigen_peak(), 1e-300)), lo, hi);
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  return Quad::integrate(integrand, lo, mid, 20, 1e-14) +
         Quad::integrate(integrand, mid, hi, 20, 1e-14);
}

double daubechies_sum(const SpectralFilter& filter, double a, double lambda) {
  require_dilation(a);
  if (!(lambda > 0.0)) throw ParameterError("daubechies_sum requires lambda > 0");
  if (filter.vanishing_order() == 0) {
    throw DivergenceError("Daubechies sum diverges for a filter with f(0) != 0");
  }
  const double log_a2 = 2.0 * std::log(a);
  const double log_lambda = std::log(lambda);
  const long j0 = std::lround((std::log(filter.eigen_peak()) - log_lambda) / log_a2);
  const double up = tail_sum(filter, log_a2, log_lambda, j0, +1, 0.0);
  const double down = tail_sum(filter, log_a2, log_lambda, j0 - 1, -1, up);
  return up + down;
}

double truncated_daubechies_sum(const SpectralFilter& filter, double a, double lambda, int M,
                                int N) {
  require_dilation(a);
  if (!(lambda > 0.0)) throw ParameterError("truncated_daubechies_sum requires lambda > 0");
  if (M < 0 || N < 0) throw ParameterError("truncation indices must be >= 0");
  const double log_a2 = 2.0 * std::log(a);
  const double log_lambda = std::log(lambda);
  double sum = 0.0;
  for (int j = -M; j <= N; ++j) {
    const double v = filter.at_eigenvalue(std::exp(j * log_a2 + log_lambda));
    sum += v * v;
  }
  return sum;
}

DaubechiesBounds daubechies_bounds(const SpectralFilter& filter, double a, int grid_points) {
  require_dilation(a);
  if (grid_points < 64) throw ParameterError("daubechies_bounds needs at least 64 grid points");

  const double period = 2.0 * std::log(a);
  const double du = period / grid_points;
  auto g = [&](double u) { return daubechies_sum(filter, a, std::exp(u)); };

  std::vector<double> values(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) values[i] = g(i * du);
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const double u_min = (min_it - values.begin()) * du;
  const double u_max = (max_it - values.begin()) * du;

  constexpr int bits = std::numeric_limits<double>::digits / 2;
  const auto refined_min =
      boost::math::tools::brent_find_minima(g, u_min - du, u_min + du, bits);
  const auto refined_max = boost::math::tools::brent_find_minima(
      [&](double u) { return -g(u); }, u_max - du, u_max + du, bits);

  DaubechiesBounds out;
  out.a = a;
  out.lower = *min_it;
  out.argmin_lambda = std::exp(u_min);
  if (refined_min.second < out.lower) {
    out.lower = refined_min.second;
    out.argmin_lambda = std::exp(refined_min.first);
  }
  out.upper = *max_it;
  out.argmax_lambda = std::exp(u_max);
  if (-refined_max.second > out.upper) {
    out.upper = -refined_max.second;
    out.argmax_lambda = std::exp(refined_max.first);
  }
  // Fold arg locations back into [1, a^2).
  for (double* x : {&out.argmin_lambda, &out.argmax_lambda}) {
    while (*x < 1.0) *x *= a * a;
    while (*x >= a * a) *x /= a * a;
  }
  out.ratio = out.upper / out.lower;
  out.reference_level = calderon_constant(filter) / period;
  return out;
}

double legendre_eval(int l, double x) {
  if (l < 0) throw ParameterError("Legendre degree must be >= 0");
  if (!(std::abs(x) <= 1.0)) throw ParameterError("Legendre argument must lie in [-1, 1]");
  if (l == 0) return 1.0;
  double p_prev = 1.0;
  double p = x;
  for (int k = 1; k < l; ++k) {
    const double next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
    p_prev = p;
    p = next;
  }
  return p;
}

void legendre_table(int L, double x, std::span<double> out) {
  if (L < 0 || out.size() < static_cast<std::size_t>(L + 1)) {
    throw ParameterError("legendre_table output too small");
  }
  if (!(std::abs(x) <= 1.0)) throw ParameterError("Legendre argument must lie in [-1, 1]");
  out[0] = 1.0;
  if (L == 0) return;
  out[1] = x;
  for (int k = 1; k < L; ++k) out[k + 1] = ((2 * k + 1) * x * out[k] - k * out[k - 1]) / (k + 1);
}

}  // namespace mexneedlet
