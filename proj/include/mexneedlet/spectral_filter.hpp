#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace mexneedlet {

enum class FilterKind { mexican, cutoff_bump, normalized_cutoff };

/// Closed interval on the half line; hi may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
};

/// A spectral filter from one of three families.
///
/// Each family has a native variable. The Mexican filter s^r e^{-s} is a
/// function of the scaled eigenvalue s = t^2 lambda, so it acts as f(t^2 Delta).
/// The cutoff filters are functions of a scaled frequency u = t nu with support
/// in [1/2, 2]; their eigenvalue form is g(sqrt(s)), so that g(t sqrt(Delta)) and
/// f(t^2 Delta) name the same operator.
///
/// operator() evaluates the native profile. at_eigenvalue() and at_frequency()
/// evaluate the two operator conventions.
class SpectralFilter {
 public:
  /// Vanishing order reported by the compactly supported families.
  static constexpr int kFlatAtZero = std::numeric_limits<int>::max();

  /// s^r e^{-s}. r = 0 (the heat kernel) is representable but is not a wavelet
  /// filter: it does not vanish at 0.
  static SpectralFilter mexican(int r);
  /// exp(-1/[9/16 - (s - 5/4)^2]) on (1/2, 2), zero elsewhere.
  static SpectralFilter cutoff_bump();
  /// The bump divided by sqrt(sum_j bump(2^j s)^2): an exact dyadic partition of unity.
  static SpectralFilter normalized_cutoff();

  /// Parses "mexican:r=<int>", "cutoff" or "normalized_cutoff".
  static SpectralFilter parse(std::string_view text);

  FilterKind kind() const { return kind_; }
  int mexican_order() const { return r_; }
  bool is_mexican(int r) const { return kind_ == FilterKind::mexican && r_ == r; }
  bool compact_support() const { return kind_ != FilterKind::mexican; }

  /// The l in f(s) = s^l f_0(s), with respect to the eigenvalue variable.
  int vanishing_order() const { return compact_support() ? kFlatAtZero : r_; }

  /// Support of the native profile.
  Interval support() const;
  /// Support in the eigenvalue variable.
  Interval eigen_support() const;
  /// Location of the maximum of at_eigenvalue().
  double eigen_peak() const;

  double operator()(double s) const;
  double at_eigenvalue(double s) const;
  double at_frequency(double u) const;

  /// Canonical config name, e.g. "mexican:r=1".
  std::string name() const;

  bool operator==(const SpectralFilter&) const = default;

 private:
  SpectralFilter(FilterKind kind, int r) : kind_(kind), r_(r) {}

  FilterKind kind_;
  int r_;
};

/// Native profile value; total on s >= 0.
double filter_eval(const SpectralFilter& filter, double s);

/// The unnormalized bump exp(-1/[9/16 - (s - 5/4)^2]).
double cutoff_bump_profile(double s);

}  // namespace mexneedlet
