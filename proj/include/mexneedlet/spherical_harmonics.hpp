#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mexneedlet/geometry.hpp"

namespace mexneedlet {

/// Flat index of the real harmonic Y_{lq}, -l <= q <= l.
constexpr std::size_t sh_index(int l, int q) {
  return static_cast<std::size_t>(l * l + l + q);
}

/// Number of real harmonics with degree <= L.
constexpr std::size_t sh_count(int L) { return static_cast<std::size_t>((L + 1) * (L + 1)); }

/// Orthonormal associated Legendre functions
///   lambda_l^m(cos theta) = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(cos theta),
/// without the Condon-Shortley phase, for 0 <= m <= l <= L. The real harmonics
/// are Y_{l0} = lambda_l^0, Y_{l,m} = sqrt2 lambda_l^m cos(m phi) and
/// Y_{l,-m} = sqrt2 lambda_l^m sin(m phi).
class LegendreTable {
 public:
  explicit LegendreTable(int L);

  /// Fills the table for colatitude with the given cosine and sine.
  void compute(double cos_theta, double sin_theta);

  int band_limit() const { return L_; }

  double operator()(int l, int m) const { return values_[offset(l, m)]; }

 private:
  static std::size_t offset(int l, int m) {
    return static_cast<std::size_t>(l * (l + 1) / 2 + m);
  }

  int L_;
  std::vector<double> values_;
  std::vector<double> a_coef_;
  std::vector<double> b_coef_;
};

/// All real harmonics Y_{lq}(x) with l <= L, indexed by sh_index.
void real_harmonics(int L, const Vec3& x, std::span<double> out);

/// Convenience overload returning a vector of size sh_count(L).
std::vector<double> real_harmonics(int L, const Vec3& x);

}  // namespace mexneedlet
