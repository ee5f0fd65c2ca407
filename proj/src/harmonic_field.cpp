#include "mexneedlet/harmonic_field.hpp"

#include <algorithm>
#include <cmath>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

HarmonicField::HarmonicField(int band_limit) : L_(band_limit) {
  if (band_limit < 0) throw ParameterError("band limit must be >= 0");
  coeffs_.assign(sh_count(band_limit), 0.0);
}

HarmonicField::HarmonicField(int band_limit, std::vector<double> coeffs)
    : L_(band_limit), coeffs_(std::move(coeffs)) {
  if (band_limit < 0) throw ParameterError("band limit must be >= 0");
  if (coeffs_.size() != sh_count(band_limit)) {
    throw ParameterError("coefficient count does not match band limit");
  }
}

HarmonicField HarmonicField::basis(int L, int l, int q) {
  if (l < 0 || l > L || q < -l || q > l) throw ParameterError("basis index out of range");
  HarmonicField f(L);
  f(l, q) = 1.0;
  return f;
}

HarmonicField HarmonicField::constant(int L, double value) {
  HarmonicField f(L);
  f(0, 0) = value * std::sqrt(kFourPi);
  return f;
}

double HarmonicField::norm_squared() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return s;
}

double HarmonicField::norm() const { return std::sqrt(norm_squared()); }

HarmonicField HarmonicField::with_band_limit(int L) const {
  HarmonicField out(L);
  const std::size_t n = std::min(out.coeffs_.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, out.coeffs_.begin());
  return out;
}

HarmonicField& HarmonicField::operator+=(const HarmonicField& other) {
  if (other.L_ > L_) *this = with_band_limit(other.L_);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HarmonicField& HarmonicField::operator-=(const HarmonicField& other) {
  if (other.L_ > L_) *this = with_band_limit(other.L_);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HarmonicField& HarmonicField::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

HarmonicField operator+(HarmonicField lhs, const HarmonicField& rhs) { return lhs += rhs; }
HarmonicField operator-(HarmonicField lhs, const HarmonicField& rhs) { return lhs -= rhs; }
HarmonicField operator*(double s, HarmonicField f) { return f *= s; }

double inner(const HarmonicField& f, const HarmonicField& g) {
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  const std::size_t n = std::min(a.size(), b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double evaluate_field(const HarmonicField& field, const Vec3& x) {
  const std::vector<double> y = real_harmonics(field.band_limit(), normalized(x));
  return inner(field, HarmonicField(field.band_limit(), y));
}

HarmonicField random_mean_zero_field(int L, std::mt19937_64& rng) {
  if (L < 1) throw ParameterError("random mean-zero field needs band limit >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  HarmonicField f(L);
  for (double& c : f.coeffs()) c = normal(rng);
  f(0, 0) = 0.0;
  f *= 1.0 / f.norm();
  return f;
}

}  // namespace mexneedlet
