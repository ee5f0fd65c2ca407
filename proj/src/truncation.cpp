#include "mexneedlet/truncation.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "mexneedlet/error.hpp"
#include "mexneedlet/quadrature.hpp"

namespace mexneedlet {

namespace {

// max of fn(exp(u)) for u in [u_lo, u_hi]: grid scan, then Brent on the best cell.
template <class Fn>
double maximize_log_grid(Fn fn, double u_lo, double u_hi, int grid = 4000) {
  auto h = [&](double u) { return fn(std::exp(u)); };
  const double du = (u_hi - u_lo) / grid;
  int best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double v = h(u_lo + i * du);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double lo = u_lo + std::max(0, best - 1) * du;
  const double hi = u_lo + std::min(grid, best + 1) * du;
  const auto r = boost::math::tools::brent_find_minima([&](double u) { return -h(u); }, lo, hi,
                                                       std::numeric_limits<double>::digits / 2);
  return std::max(best_v, -r.second);
}

void check_window(const SampledFrame& frame, int M, int N) {
  if (-M > N) throw ParameterError("empty truncation window");
  if (-M < frame.j_min() || N > frame.j_max()) {
    throw ScaleRangeError("truncation window [" + std::to_string(-M) + ", " + std::to_string(N) +
                          "] exceeds the frame window");
  }
}

}  // namespace

double moment_constant(const SpectralFilter& filter, int J) {
  if (J < 1) throw ParameterError("moment order J must be >= 1");
  auto fn = [&](double s) { return std::pow(s, J) * std::abs(filter.at_eigenvalue(s)); };
  if (filter.compact_support()) {
    const Interval sup = filter.eigen_support();
    return maximize_log_grid(fn, std::log(sup.lo), std::log(sup.hi));
  }
  const double peak = J + filter.mexican_order();
  return maximize_log_grid(fn, std::log(peak) - 12.0, std::log(peak) + 6.0);
}

double reduced_sup_norm(const SpectralFilter& filter, int l) {
  if (l < 1) throw ParameterError("vanishing order l must be >= 1");
  if (l > filter.vanishing_order()) {
    throw ParameterError("l exceeds the vanishing order of the filter");
  }
  if (!filter.compact_support()) {
    const int k = filter.mexican_order() - l;
    return k == 0 ? 1.0 : std::pow(k / std::exp(1.0), k);
  }
  auto fn = [&](double s) { return std::abs(filter.at_eigenvalue(s)) / std::pow(s, l); };
  const Interval sup = filter.eigen_support();
  return maximize_log_grid(fn, std::log(sup.lo), std::log(sup.hi));
}

FrequencyBoundReport frequency_bound(const SpectralFilter& filter, double a, int l, int J, double L,
                                     int M, int N, double tail_norm, double F_norm) {
  if (J < 1) throw ParameterError("decay order J must be >= 1");
  if (!(L > 0.0)) throw ParameterError("spectral level L must be > 0");
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  if (tail_norm < 0.0 || F_norm < 0.0) throw ParameterError("norms must be nonnegative");
  constexpr double lambda1 = sphere_eigenvalue(1);

  FrequencyBoundReport r;
  r.M = M;
  r.N = N;
  r.L = L;
  r.l = l;
  r.J = J;
  r.a = a;
  r.B_a = daubechies_bounds(filter, a).upper;
  r.f0_sup = reduced_sup_norm(filter, l);
  r.M_J = moment_constant(filter, J);
  r.c_prime_L = std::pow(L, 2.0 * l) * r.f0_sup * r.f0_sup / (std::pow(a, 4.0 * l) - 1.0);
  r.C_prime_J = r.M_J * r.M_J / ((std::pow(a, 4.0 * J) - 1.0) * std::pow(lambda1, 2.0 * J));
  r.tail_norm = tail_norm;
  r.F_norm = F_norm;
  r.bound_without_C0b = (r.c_prime_L / std::pow(a, 4.0 * M * l) +
                         r.C_prime_J / std::pow(a, 4.0 * N * J)) *
                            F_norm +
                        2.0 * r.B_a * tail_norm;
  return r;
}

double spectral_tail_norm(const HarmonicField& field, double L) {
  double sum = 0.0;
  for (int l = 0; l <= field.band_limit(); ++l) {
    if (!(sphere_eigenvalue(l) > L)) continue;
    for (int q = -l; q <= l; ++q) sum += field(l, q) * field(l, q);
  }
  return std::sqrt(sum);
}

double measured_truncation_error(const SampledFrame& frame, const HarmonicField& field, int M,
                                 int N) {
  check_window(frame, M, N);
  HarmonicField removed(frame.band_limit());
  if (-M > frame.j_min()) {
    FrameSelection below;
    below.j_hi = -M - 1;
    removed += frame.apply(field, below);
  }
  if (N < frame.j_max()) {
    FrameSelection above;
    above.j_lo = N + 1;
    removed += frame.apply(field, above);
  }
  return removed.norm();
}

double SphericalCap::distance(const Vec3& x) const {
  return std::max(0.0, geodesic_distance(center, x) - radius);
}

FrameSelection spatial_index_set(double a, ScaleWindow window, const SphericalCap& cap,
                                 ScaleConstants c) {
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  if (!c) throw ParameterError("scale constants c_j are required");
  FrameSelection sel;
  sel.j_lo = window.j_min;
  sel.j_hi = window.j_max;
  sel.keep = [a, cap, c](int j, const Vec3& x) {
    const double cj = c(j);
    if (!(cj > 0.0)) throw ParameterError("c_j must be > 0");
    return cap.distance(x) <= (cj + 1.0) * std::pow(a, j);
  };
  return sel;
}

double cap_norm_squared(const HarmonicField& field, const SphericalCap& cap) {
  if (cap.radius >= kPi) return field.norm_squared();
  if (cap.radius <= 0.0) return 0.0;
  const int L = field.band_limit();
  const Vec3 ez = normalized(cap.center);
  const Vec3 seed = std::abs(ez.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  const Vec3 ex = normalized(cross(seed, ez));
  const Vec3 ey = cross(ez, ex);

  // Averaging F^2 over rotations about the cap axis leaves a polynomial of
  // degree <= 2L in z, so L + 1 Gauss nodes and 2L + 1 longitudes are exact.
  const GaussLegendre gl = gauss_legendre(L + 2);
  const int n_phi = 2 * L + 2;
  const double z_lo = std::cos(cap.radius);
  const double half = 0.5 * (1.0 - z_lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double z = z_lo + half * (gl.nodes[i] + 1.0);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double ring = 0.0;
    for (int k = 0; k < n_phi; ++k) {
      const double phi = kTwoPi * k / n_phi;
      const Vec3 x = rho * std::cos(phi) * ex + rho * std::sin(phi) * ey + z * ez;
      const double v = evaluate_field(field, x);
      ring += v * v;
    }
    sum += gl.weights[i] * half * ring * kTwoPi / n_phi;
  }
  return sum;
}

SpatialTruncationReport spatial_truncation_report(const SampledFrame& frame, double a,
                                                  const HarmonicField& field,
                                                  const SphericalCap& cap, ScaleConstants c,
                                                  double I_decay, int M, int N, double B_emp) {
  check_window(frame, M, N);
  const FrameSelection index_set = spatial_index_set(a, {-M, N}, cap, c);
  FrameSelection complement = index_set;
  complement.keep = [keep = index_set.keep](int j, const Vec3& x) { return !keep(j, x); };

  SpatialTruncationReport r;
  const HarmonicField rest = frame.apply(field, complement);
  r.measured_error = rest.norm();
  r.complement_energy = frame.energy(field, complement);
  r.complement_norm = r.measured_error;

  double scale_sum = 0.0;
  for (int j = -M; j <= N; ++j) {
    scale_sum += std::pow(a, -2.0 * j) * std::pow(c(j), 2.0 - 2.0 * I_decay);
  }
  const double chi2 = std::clamp(cap_norm_squared(field, cap), 0.0, field.norm_squared());
  r.chi_norm = std::sqrt(chi2);
  r.structural_factor = std::sqrt(cap.area() * scale_sum) * r.chi_norm;
  r.leakage = B_emp * std::sqrt(std::max(0.0, field.norm_squared() - chi2));
  r.ratio = r.structural_factor > 0.0 ? r.measured_error / r.structural_factor : 0.0;
  return r;
}

}  // namespace mexneedlet
