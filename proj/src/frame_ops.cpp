#include "mexneedlet/frame_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

namespace {

constexpr int kMaxWalk = 100000;

// Terms |f(a^{2j} lambda)|^2 for j = first, first + 1, ... covering everything
// above 1e-40 of the peak term.
struct ScaleTerms {
  int first = 0;
  std::vector<double> terms;
};

ScaleTerms scale_terms(const SpectralFilter& filter, double a, double lambda) {
  const double log_a2 = 2.0 * std::log(a);
  const int jp = static_cast<int>(std::lround(std::log(filter.eigen_peak() / lambda) / log_a2));
  auto term = [&](int j) {
    const double v = filter.at_eigenvalue(std::exp(j * log_a2) * lambda);
    return v * v;
  };
  double peak = 0.0;
  for (int j = jp - 2; j <= jp + 2; ++j) peak = std::max(peak, term(j));
  const double floor = 1e-40 * peak;
  int lo = jp - 2;
  int steps = 0;
  while (term(lo - 1) > floor && ++steps < kMaxWalk) --lo;
  int hi = jp + 2;
  steps = 0;
  while (term(hi + 1) > floor && ++steps < kMaxWalk) ++hi;
  ScaleTerms out;
  out.first = lo;
  for (int j = lo; j <= hi; ++j) out.terms.push_back(term(j));
  return out;
}

}  // namespace

ScaleWindow scale_window_for(const SpectralFilter& filter, double a, int l_lo, int l_hi,
                             double eps) {
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  if (l_lo < 1 || l_hi < l_lo) throw ParameterError("degree range must satisfy 1 <= l_lo <= l_hi");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
  int j_lo = std::numeric_limits<int>::max();
  int j_hi = std::numeric_limits<int>::min();
  for (int l = l_lo; l <= l_hi; ++l) {
    const ScaleTerms st = scale_terms(filter, a, sphere_eigenvalue(l));
    double total = 0.0;
    for (double v : st.terms) total += v;
    const double allowed = 0.5 * eps * total;
    const int n = static_cast<int>(st.terms.size());
    // Largest start index whose discarded lower tail stays within budget.
    int lo = 0;
    double below = 0.0;
    while (lo + 1 < n && below + st.terms[static_cast<std::size_t>(lo)] <= allowed) {
      below += st.terms[static_cast<std::size_t>(lo)];
      ++lo;
    }
    int hi = n - 1;
    double above = 0.0;
    while (hi > lo && above + st.terms[static_cast<std::size_t>(hi)] <= allowed) {
      above += st.terms[static_cast<std::size_t>(hi)];
      --hi;
    }
    j_lo = std::min(j_lo, st.first + lo);
    j_hi = std::max(j_hi, st.first + hi);
  }
  return {j_lo, j_hi};
}

DefaultWindow default_scale_window(const SpectralFilter& filter, double a, double b, int L_max,
                                   double eps) {
  if (L_max < 1) throw ParameterError("L_max must be >= 1");
  if (!(b > 0.0 && b <= 1.0)) throw ParameterError("fineness b must lie in (0, 1]");
  DefaultWindow out;
  out.unclipped = scale_window_for(filter, a, 1, L_max, eps);
  out.window = out.unclipped;
  while (b * std::pow(a, out.window.j_min) < kMinCellDiameter) {
    ++out.window.j_min;
    out.clipped = true;
  }
  if (out.window.j_min > out.window.j_max) {
    throw SizeOverflowError("no admissible scale above the cell-size limit");
  }
  return out;
}

const ScalePartition& FrameSpec::partition(int j) const {
  if (j < j_min || j > j_max) {
    throw ScaleRangeError("scale " + std::to_string(j) + " outside the spec window");
  }
  return partitions[static_cast<std::size_t>(j - j_min)];
}

std::vector<double> FrameSpec::multiplier(int j) const {
  std::vector<double> m(static_cast<std::size_t>(L_max + 1), 0.0);
  const double t2 = std::pow(a, 2.0 * j);
  for (int l = 1; l <= L_max; ++l) {
    m[static_cast<std::size_t>(l)] = filter.at_eigenvalue(t2 * sphere_eigenvalue(l));
  }
  return m;
}

FrameSpec make_frame_spec(const SpectralFilter& filter, double a, double b, int L_max,
                          std::optional<ScaleWindow> window) {
  if (L_max < 1) throw ParameterError("L_max must be >= 1");
  const ScaleWindow w = window ? *window : default_scale_window(filter, a, b, L_max).window;
  if (w.j_min > w.j_max) throw ParameterError("empty scale window");
  FrameSpec spec;
  spec.filter = filter;
  spec.a = a;
  spec.b = b;
  spec.j_min = w.j_min;
  spec.j_max = w.j_max;
  spec.L_max = L_max;
  for (int j = w.j_min; j <= w.j_max; ++j) spec.partitions.push_back(build_partition(j, a, b));
  return spec;
}

SampledFrame sampled_frame(const FrameSpec& spec) {
  std::vector<SampledScale> scales;
  for (int j = spec.j_min; j <= spec.j_max; ++j) {
    scales.push_back({j, spec.partition(j).sampling(), spec.multiplier(j)});
  }
  return SampledFrame(spec.L_max, std::move(scales));
}

HarmonicField frame_element(const FrameSpec& spec, int j, std::size_t k) {
  const Cell cell = spec.partition(j).cell(k);
  const std::vector<double> m = spec.multiplier(j);
  const std::vector<double> y = real_harmonics(spec.L_max, cell.center);
  const double root_mu = std::sqrt(cell.measure);
  HarmonicField out(spec.L_max);
  for (int l = 1; l <= spec.L_max; ++l) {
    for (int q = -l; q <= l; ++q) {
      out(l, q) = root_mu * m[static_cast<std::size_t>(l)] * y[sh_index(l, q)];
    }
  }
  return out;
}

FrameCoefficients analyze(const SampledFrame& frame, const HarmonicField& field) {
  return frame.analyze(field);
}

HarmonicField summation_operator(const SampledFrame& frame, const HarmonicField& field) {
  return frame.apply(field);
}

double rayleigh_quotient(const SampledFrame& frame, const HarmonicField& field) {
  const double n2 = field.norm_squared();
  if (n2 == 0.0) throw ZeroFieldError("Rayleigh quotient of the zero field");
  return frame.energy(field) / n2;
}

double spectral_quadratic_form(const FrameSpec& spec, const HarmonicField& field) {
  if (field.band_limit() > spec.L_max) throw BandLimitError("field exceeds the spec band limit");
  double sum = 0.0;
  for (int j = spec.j_min; j <= spec.j_max; ++j) {
    const std::vector<double> m = spec.multiplier(j);
    for (int l = 1; l <= field.band_limit(); ++l) {
      double c2 = 0.0;
      for (int q = -l; q <= l; ++q) c2 += field(l, q) * field(l, q);
      sum += m[static_cast<std::size_t>(l)] * m[static_cast<std::size_t>(l)] * c2;
    }
  }
  return sum;
}

EmpiricalBounds empirical_frame_bounds(const SampledFrame& frame, int trials, std::uint64_t seed,
                                       int field_band_limit) {
  if (trials < 1) throw ParameterError("trials must be >= 1");
  const int L = field_band_limit < 0 ? frame.band_limit() : field_band_limit;
  if (L < 1) throw ParameterError("random fields need band limit >= 1");
  std::mt19937_64 rng(seed);
  std::vector<HarmonicField> fields;
  fields.reserve(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) fields.push_back(random_mean_zero_field(L, rng));
  const std::vector<double> e = frame.energies(fields);
  EmpiricalBounds out;
  out.trials = trials;
  out.seed = seed;
  out.min = std::numeric_limits<double>::infinity();
  out.max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const double q = e[i] / fields[i].norm_squared();
    out.min = std::min(out.min, q);
    out.max = std::max(out.max, q);
  }
  out.ratio = out.max / out.min;
  return out;
}

double frame_operator_norm(const SampledFrame& frame, std::uint64_t seed, int max_iterations,
                           int field_band_limit) {
  if (max_iterations < 1) throw ParameterError("max_iterations must be >= 1");
  const int L = field_band_limit < 0 ? frame.band_limit() : field_band_limit;
  if (L < 1) throw ParameterError("power iteration needs band limit >= 1");
  std::mt19937_64 rng(seed);
  HarmonicField v = random_mean_zero_field(L, rng);
  double lambda = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    HarmonicField w = frame.apply(v).with_band_limit(L);
    const double next = inner(w, v);
    const double n = w.norm();
    if (n == 0.0) return 0.0;
    v = (1.0 / n) * w;
    const bool settled = it > 0 && std::abs(next - lambda) <= 1e-13 * next;
    lambda = next;
    if (settled) break;
  }
  return lambda;
}

double band_limit_residual(const FrameSpec& spec) {
  const double lambda = sphere_eigenvalue(spec.L_max + 1);
  double worst = 0.0;
  for (int j = spec.j_min; j <= spec.j_max; ++j) {
    worst = std::max(worst, std::abs(spec.filter.at_eigenvalue(std::pow(spec.a, 2.0 * j) * lambda)));
  }
  return worst;
}

}  // namespace mexneedlet
