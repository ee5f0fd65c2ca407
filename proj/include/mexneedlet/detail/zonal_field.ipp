#pragma once

#include <cmath>
#include <vector>

#include "mexneedlet/quadrature.hpp"

namespace mexneedlet {

// Funk-Hecke: a zonal h(x . c) has coefficients h_l Y_{lq}(c) with
// h_l = 2 pi int_{-1}^{1} h(u) P_l(u) du.
template <class Profile>
HarmonicField zonal_field(int L, const Vec3& axis, Profile&& profile, int quadrature_points) {
  const int n = quadrature_points > 0 ? quadrature_points : 4 * L + 256;
  const GaussLegendre gl = gauss_legendre(n);
  std::vector<double> moments(static_cast<std::size_t>(L + 1), 0.0);
  std::vector<double> p(static_cast<std::size_t>(L + 1));
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double u = gl.nodes[i];
    const double h = profile(std::acos(u));
    p[0] = 1.0;
    if (L >= 1) p[1] = u;
    for (int k = 1; k < L; ++k) {
      p[static_cast<std::size_t>(k + 1)] =
          ((2 * k + 1) * u * p[static_cast<std::size_t>(k)] - k * p[static_cast<std::size_t>(k - 1)]) /
          (k + 1);
    }
    for (int l = 0; l <= L; ++l) moments[static_cast<std::size_t>(l)] += gl.weights[i] * h * p[static_cast<std::size_t>(l)];
  }
  const std::vector<double> y = real_harmonics(L, normalized(axis));
  HarmonicField field(L);
  for (int l = 1; l <= L; ++l) {
    const double hl = kTwoPi * moments[static_cast<std::size_t>(l)];
    for (int q = -l; q <= l; ++q) field(l, q) = hl * y[sh_index(l, q)];
  }
  return field;
}

}  // namespace mexneedlet
