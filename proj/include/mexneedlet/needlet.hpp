#pragma once

#include <string_view>
#include <vector>

#include "mexneedlet/sampled_frame.hpp"
#include "mexneedlet/sphere_partition.hpp"
#include "mexneedlet/spectral_filter.hpp"

namespace mexneedlet {

/// nu_l = l (degree) or sqrt(l(l+1)) (sqrt_laplacian).
enum class FrequencyConvention { degree, sqrt_laplacian };

double frequency(FrequencyConvention convention, int l);
FrequencyConvention parse_convention(std::string_view text);

struct NeedletScale {
  int j = 0;
  int cut_degree = 0;  // l(j)
  CubatureRule rule;   // degree 2 l(j)
};

/// Cutoff needlets phi_{j,i} = sqrt(lambda_i) sum_l g(2^j nu_l) sum_q Y_{lq}(x_i) Y_{lq}
/// on cubature rules of degree 2 l(j).
struct NeedletFrame {
  SpectralFilter g = SpectralFilter::normalized_cutoff();
  FrequencyConvention convention = FrequencyConvention::degree;
  std::vector<NeedletScale> scales;
  SampledFrame frame;

  /// Degrees l >= 1 at which sum over the scales of g(2^j nu_l)^2 is the full sum.
  int covered_lo = 0;
  int covered_hi = -1;
};

/// Scales j_min..j_max. l(j) is the largest l with 2^j nu_l < 2; scales with
/// l(j) = 0 carry nothing and are dropped. Throws SizeOverflowError if l(j) > 512.
NeedletFrame build_needlet_frame(const SpectralFilter& g, int j_min, int j_max,
                                 FrequencyConvention convention);

struct TailBound {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = sum over j with a^{2(j-1)} > M/b of |f(b a^{2j})|^2 for f(s) = s e^{-s};
/// rhs = a^2/(a^2-1) e^{-2M} (M/2 + 1/4). Requires M > 1/2.
TailBound tail_bound_lhs_rhs(double M, double b, double a);

struct CrossingIndex {
  double m = 0.0;
  double lower = 0.0;  // (1/2) log_a(N / [l(l+1)])
  double upper = 0.0;  // (1/2) log_a(r N / l)
  bool in_bracket = false;
  double residual = 0.0;
};

/// Root m of a^{2m} l(l+1) = N + r max(-m, 0), by bisection.
CrossingIndex crossing_index(double N, double r, int l, double a);

/// r = max(1, 8 ln a).
double hybrid_rate(double a);

/// Least integer strictly greater than sqrt(N + r (j-1)_-) / a^{j-1}.
int hybrid_cut_degree(int j, double N, double a);

struct HybridTailDiagnostics {
  double N = 0.0;
  double a = 2.0;
  int l_max = 0;
  double eps3 = 0.0;
  double eps4 = 0.0;
  double eps3_ratio = 0.0;  // eps3 / (e^{-N} N)
  double eps4_ratio = 0.0;  // eps4 / (e^{-N} N^5)
};

/// eps3 = max over s of sum_{a^{2j} > N a^2 / s} |f(a^{2j} s)|^2 (1000-point log
/// grid over one period) and eps4 = sum_{l <= l_max} (2l+1) sum_j |f_{2,j}(a^{2j} l(l+1))|^2,
/// where f_{2,j} keeps f(s) = s e^{-s} only for s > a^2 (N + r (j-1)_-).
HybridTailDiagnostics hybrid_tail_diagnostics(double N, double a, int l_max);

/// Mexican(1) frame whose scale j keeps degrees l <= l(j) and samples on a
/// cubature rule of degree 2 l(j).
SampledFrame build_hybrid_frame(double a, double N, int j_min, int j_max, int L);

}  // namespace mexneedlet
