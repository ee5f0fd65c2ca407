#include "mexneedlet/spectral_filter.hpp"

#include <charconv>
#include <cmath>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

namespace {

double mexican_profile(int r, double s) {
  if (s <= 0.0) return r == 0 ? 1.0 : 0.0;
  // exp of the log avoids inf * 0 when s^r overflows.
  return std::exp(r * std::log(s) - s);
}

// Only j in {-1, 0, 1} can contribute for s in (1/2, 2); the wider loop costs nothing.
double normalized_cutoff_profile(double s) {
  const double psi = cutoff_bump_profile(s);
  if (psi == 0.0) return 0.0;
  double energy = 0.0;
  for (int j = -2; j <= 2; ++j) {
    const double v = cutoff_bump_profile(std::ldexp(s, j));
    energy += v * v;
  }
  return psi / std::sqrt(energy);
}

}  // namespace

double cutoff_bump_profile(double s) {
  if (!(s > 0.5 && s < 2.0)) return 0.0;
  const double d = s - 1.25;
  const double gap = 0.5625 - d * d;
  if (gap <= 0.0) return 0.0;
  return std::exp(-1.0 / gap);
}

SpectralFilter SpectralFilter::mexican(int r) {
  if (r < 0) throw ParameterError("mexican filter order must be >= 0");
  return SpectralFilter(FilterKind::mexican, r);
}

SpectralFilter SpectralFilter::cutoff_bump() { return SpectralFilter(FilterKind::cutoff_bump, 0); }

SpectralFilter SpectralFilter::normalized_cutoff() {
  return SpectralFilter(FilterKind::normalized_cutoff, 0);
}

SpectralFilter SpectralFilter::parse(std::string_view text) {
  if (text == "cutoff" || text == "cutoff_bump") return cutoff_bump();
  if (text == "normalized_cutoff") return normalized_cutoff();
  constexpr std::string_view prefix = "mexican:r=";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    int r = -1;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && r >= 0) return mexican(r);
  }
  if (text == "mexican") return mexican(1);
  throw ParameterError("unknown filter '" + std::string(text) +
                       "' (expected mexican:r=<n>, cutoff or normalized_cutoff)");
}

Interval SpectralFilter::support() const {
  if (compact_support()) return {0.5, 2.0};
  return {};
}

Interval SpectralFilter::eigen_support() const {
  if (compact_support()) return {0.25, 4.0};
  return {};
}

double SpectralFilter::eigen_peak() const {
  switch (kind_) {
    case FilterKind::mexican:
      return static_cast<double>(r_);
    case FilterKind::cutoff_bump:
    case FilterKind::normalized_cutoff:
      // Both profiles are symmetric about 5/4 in the native variable.
      return 1.5625;
  }
  return 1.0;
}

double SpectralFilter::operator()(double s) const {
  switch (kind_) {
    case FilterKind::mexican:
      return mexican_profile(r_, s);
    case FilterKind::cutoff_bump:
      return cutoff_bump_profile(s);
    case FilterKind::normalized_cutoff:
      return normalized_cutoff_profile(s);
  }
  return 0.0;
}

double SpectralFilter::at_eigenvalue(double s) const {
  if (kind_ == FilterKind::mexican) return mexican_profile(r_, s);
  return (*this)(std::sqrt(s));
}

double SpectralFilter::at_frequency(double u) const {
  if (kind_ == FilterKind::mexican) return mexican_profile(r_, u * u);
  return (*this)(u);
}

std::string SpectralFilter::name() const {
  switch (kind_) {
    case FilterKind::mexican:
      return "mexican:r=" + std::to_string(r_);
    case FilterKind::cutoff_bump:
      return "cutoff";
    case FilterKind::normalized_cutoff:
      return "normalized_cutoff";
  }
  return {};
}

double filter_eval(const SpectralFilter& filter, double s) {
  if (!(s >= 0.0)) throw ParameterError("filter_eval requires s >= 0");
  return filter(s);
}

}  // namespace mexneedlet
