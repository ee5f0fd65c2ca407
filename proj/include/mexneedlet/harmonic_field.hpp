#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mexneedlet/geometry.hpp"
#include "mexneedlet/spherical_harmonics.hpp"

namespace mexneedlet {

/// Band-limited function on S^2 in the real orthonormal harmonic basis.
class HarmonicField {
 public:
  HarmonicField() : HarmonicField(0) {}
  explicit HarmonicField(int band_limit);
  HarmonicField(int band_limit, std::vector<double> coeffs);

  /// Single basis function Y_{lq} at band limit L.
  static HarmonicField basis(int L, int l, int q);
  static HarmonicField constant(int L, double value);

  int band_limit() const { return L_; }
  double& operator()(int l, int q) { return coeffs_[sh_index(l, q)]; }
  double operator()(int l, int q) const { return coeffs_[sh_index(l, q)]; }
  std::span<double> coeffs() { return coeffs_; }
  std::span<const double> coeffs() const { return coeffs_; }

  bool mean_zero() const { return coeffs_[0] == 0.0; }
  /// Squared L^2 norm (Parseval).
  double norm_squared() const;
  double norm() const;

  /// Copy with band limit L (truncated or zero padded).
  HarmonicField with_band_limit(int L) const;

  HarmonicField& operator+=(const HarmonicField& other);
  HarmonicField& operator-=(const HarmonicField& other);
  HarmonicField& operator*=(double s);

 private:
  int L_;
  std::vector<double> coeffs_;
};

HarmonicField operator+(HarmonicField lhs, const HarmonicField& rhs);
HarmonicField operator-(HarmonicField lhs, const HarmonicField& rhs);
HarmonicField operator*(double s, HarmonicField f);

/// L^2 inner product over the common band.
double inner(const HarmonicField& f, const HarmonicField& g);

/// F(x) = sum coeffs(l, q) Y_{lq}(x).
double evaluate_field(const HarmonicField& field, const Vec3& x);

/// I.i.d. standard normal coefficients with (0,0) zeroed, scaled to unit norm.
HarmonicField random_mean_zero_field(int L, std::mt19937_64& rng);

/// Band-limited projection of the zonal function x -> profile(angle(x, axis)),
/// computed by Gauss-Legendre quadrature of the Legendre moments. The (0,0)
/// coefficient is dropped, so the result is mean-zero.
template <class Profile>
HarmonicField zonal_field(int L, const Vec3& axis, Profile&& profile, int quadrature_points = 0);

}  // namespace mexneedlet

#include "mexneedlet/detail/zonal_field.ipp"
