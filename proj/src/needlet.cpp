#include "mexneedlet/needlet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mexneedlet/error.hpp"
#include "mexneedlet/spectral_core.hpp"

namespace mexneedlet {

namespace {

constexpr int kMaxCubatureDegree = 512;

double mexican1(double s) { return s * std::exp(-s); }

// Sum of |f(s0 a^{2k})|^2 for k = 0, 1, ... with f(s) = s e^{-s}.
double upward_tail(double s0, double a) {
  const double a2 = a * a;
  double sum = 0.0;
  double s = s0;
  for (int k = 0; k < 100000; ++k, s *= a2) {
    const double v = mexican1(s);
    sum += v * v;
    if (s > 50.0 && v * v <= 1e-20 * sum) break;
    if (v == 0.0 && s > 1.0) break;
  }
  return sum;
}

// log of sqrt(N + r (j-1)_-) / a^{j-1}.
double log_cut_value(int j, double N, double a) {
  const double r = hybrid_rate(a);
  return 0.5 * std::log(N + r * std::max(1 - j, 0)) - (j - 1) * std::log(a);
}

}  // namespace

double frequency(FrequencyConvention convention, int l) {
  return convention == FrequencyConvention::degree ? static_cast<double>(l)
                                                   : std::sqrt(sphere_eigenvalue(l));
}

FrequencyConvention parse_convention(std::string_view text) {
  if (text == "degree") return FrequencyConvention::degree;
  if (text == "sqrt_laplacian") return FrequencyConvention::sqrt_laplacian;
  throw ParameterError("unknown frequency convention '" + std::string(text) + "'");
}

NeedletFrame build_needlet_frame(const SpectralFilter& g, int j_min, int j_max,
                                 FrequencyConvention convention) {
  if (g.kind() != FilterKind::normalized_cutoff) {
    throw UnsupportedFilterError("needlet frames need the normalized cutoff filter");
  }
  if (j_min > j_max) throw ParameterError("empty scale range");

  std::vector<NeedletScale> scales;
  int L = 0;
  for (int j = j_min; j <= j_max; ++j) {
    const double t = std::ldexp(1.0, j);
    int cut = 0;
    while (t * frequency(convention, cut + 1) < 2.0) {
      ++cut;
      if (cut > kMaxCubatureDegree) {
        throw SizeOverflowError("needlet cut degree exceeds " + std::to_string(kMaxCubatureDegree));
      }
    }
    if (cut == 0) continue;
    scales.push_back({j, cut, cubature_rule(std::min(2 * cut, kMaxCubatureDegree))});
    L = std::max(L, cut);
  }
  if (scales.empty()) throw ParameterError("no needlet scale carries a positive degree");
  for (const auto& s : scales) {
    if (2 * s.cut_degree > kMaxCubatureDegree) {
      throw SizeOverflowError("needlet cubature degree exceeds " +
                              std::to_string(kMaxCubatureDegree));
    }
  }

  std::vector<SampledScale> sampled;
  for (const auto& s : scales) {
    std::vector<double> m(static_cast<std::size_t>(L + 1), 0.0);
    const double t = std::ldexp(1.0, s.j);
    for (int l = 1; l <= s.cut_degree; ++l) m[static_cast<std::size_t>(l)] = g(t * frequency(convention, l));
    sampled.push_back({s.j, s.rule.layout, std::move(m)});
  }

  NeedletFrame out{g, convention, std::move(scales), SampledFrame(L, std::move(sampled)), 0, -1};
  // Degree l is covered when every j with 2^j nu_l in (1/2, 2) is present.
  for (int l = 1; l <= L; ++l) {
    const double nu = frequency(convention, l);
    const int lo = static_cast<int>(std::floor(std::log2(0.5 / nu))) + 1;
    const int hi = static_cast<int>(std::ceil(std::log2(2.0 / nu))) - 1;
    if (lo < j_min || hi > j_max) continue;
    if (out.covered_hi < 0) out.covered_lo = l;
    if (out.covered_hi < 0 || out.covered_hi == l - 1) out.covered_hi = l;
  }
  return out;
}

TailBound tail_bound_lhs_rhs(double M, double b, double a) {
  if (!(M > 0.5)) throw ParameterError("tail bound needs M > 1/2");
  if (!(b > 0.0)) throw ParameterError("b must be > 0");
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  const double a2 = a * a;
  const double log_a2 = std::log(a2);
  int j = static_cast<int>(std::floor(1.0 + std::log(M / b) / log_a2)) - 1;
  while (!(std::pow(a2, j - 1) > M / b)) ++j;
  TailBound out;
  out.lhs = upward_tail(b * std::pow(a2, j), a);
  out.rhs = a2 / (a2 - 1.0) * std::exp(-2.0 * M) * (M / 2.0 + 0.25);
  return out;
}

CrossingIndex crossing_index(double N, double r, int l, double a) {
  if (!(N >= 1.0)) throw ParameterError("crossing index needs N >= 1");
  if (!(r >= 1.0)) throw ParameterError("crossing index needs r >= 1");
  if (l < 1) throw ParameterError("crossing index needs l >= 1");
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  const double lambda = sphere_eigenvalue(l);
  const double log_a = std::log(a);
  auto h = [&](double m) { return std::exp(2.0 * m * log_a) * lambda - N - r * std::max(-m, 0.0); };

  CrossingIndex out;
  out.lower = 0.5 * std::log(N / lambda) / log_a;
  out.upper = 0.5 * std::log(r * N / l) / log_a;
  if (lambda <= N) {
    out.m = out.lower;
  } else {
    double lo = out.lower;  // h(lo) = -r (-lo) < 0
    double hi = 0.0;        // h(0) = lambda - N > 0
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (h(mid) < 0.0 ? lo : hi) = mid;
    }
    out.m = 0.5 * (lo + hi);
  }
  out.residual = std::abs(h(out.m));
  constexpr double slack = 1e-12;
  out.in_bracket = out.m >= out.lower - slack && out.m <= out.upper + slack;
  return out;
}

double hybrid_rate(double a) { return std::max(1.0, 8.0 * std::log(a)); }

int hybrid_cut_degree(int j, double N, double a) {
  if (!(N >= 1.0)) throw ParameterError("hybrid cut degree needs N >= 1");
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  const double v = std::exp(log_cut_value(j, N, a));
  if (!(v < 1e9)) throw SizeOverflowError("hybrid cut degree too large");
  return static_cast<int>(std::floor(v)) + 1;
}

HybridTailDiagnostics hybrid_tail_diagnostics(double N, double a, int l_max) {
  if (!(N >= 1.0)) throw ParameterError("diagnostics need N >= 1");
  if (!(a > 1.0)) throw ParameterError("dilation a must be > 1");
  if (l_max < 1) throw ParameterError("l_max must be >= 1");
  HybridTailDiagnostics d;
  d.N = N;
  d.a = a;
  d.l_max = l_max;

  const double a2 = a * a;
  const double log_a2 = std::log(a2);
  constexpr int grid = 1000;
  for (int i = 0; i < grid; ++i) {
    const double s = std::exp(log_a2 * i / grid);
    // Smallest j with a^{2j} s > N a^2.
    int j = static_cast<int>(std::floor(std::log(N * a2 / s) / log_a2)) - 1;
    while (!(std::pow(a2, j) * s > N * a2)) ++j;
    d.eps3 = std::max(d.eps3, upward_tail(std::pow(a2, j) * s, a));
  }

  const double log_a = std::log(a);
  const double r = hybrid_rate(a);
  for (int l = 1; l <= l_max; ++l) {
    // First j with a^{2j} l(l+1) > a^2 (N + r (j-1)_-), the support of f_{2,j}.
    const double log_lambda = std::log(sphere_eigenvalue(l));
    auto beyond = [&](int j) {
      return 2.0 * j * log_a + log_lambda > 2.0 * log_a + std::log(N + r * std::max(1 - j, 0));
    };
    int lo = -4000;
    int hi = 4000;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (beyond(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    d.eps4 += (2.0 * l + 1.0) * upward_tail(std::pow(a2, lo) * sphere_eigenvalue(l), a);
  }

  d.eps3_ratio = d.eps3 / (std::exp(-N) * N);
  d.eps4_ratio = d.eps4 / (std::exp(-N) * std::pow(N, 5));
  return d;
}

SampledFrame build_hybrid_frame(double a, double N, int j_min, int j_max, int L) {
  if (j_min > j_max) throw ParameterError("empty scale range");
  if (L < 1) throw ParameterError("band limit must be >= 1");
  const SpectralFilter f = SpectralFilter::mexican(1);
  std::vector<SampledScale> scales;
  for (int j = j_min; j <= j_max; ++j) {
    const int cut = std::min(hybrid_cut_degree(j, N, a), L);
    if (2 * cut > kMaxCubatureDegree) throw SizeOverflowError("hybrid cubature degree too large");
    std::vector<double> m(static_cast<std::size_t>(L + 1), 0.0);
    const double t2 = std::pow(a, 2.0 * j);
    for (int l = 1; l <= cut; ++l) m[static_cast<std::size_t>(l)] = f.at_eigenvalue(t2 * sphere_eigenvalue(l));
    scales.push_back({j, cubature_rule(2 * cut).layout, std::move(m)});
  }
  return SampledFrame(L, std::move(scales));
}

}  // namespace mexneedlet
