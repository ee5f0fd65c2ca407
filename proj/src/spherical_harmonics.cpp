#include "mexneedlet/spherical_harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

LegendreTable::LegendreTable(int L) : L_(L) {
  if (L < 0) throw ParameterError("band limit must be >= 0");
  const std::size_t n = static_cast<std::size_t>((L + 1) * (L + 2) / 2);
  values_.assign(n, 0.0);
  a_coef_.assign(n, 0.0);
  b_coef_.assign(n, 0.0);
  for (int m = 0; m <= L; ++m) {
    for (int l = m + 2; l <= L; ++l) {
      const double l2 = static_cast<double>(l) * l;
      const double m2 = static_cast<double>(m) * m;
      const double lm1 = l - 1.0;
      a_coef_[offset(l, m)] = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
      b_coef_[offset(l, m)] = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
    }
  }
}

void LegendreTable::compute(double cos_theta, double sin_theta) {
  const double x = cos_theta;
  double diag = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int m = 0; m <= L_; ++m) {
    if (m > 0) diag *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sin_theta;
    values_[offset(m, m)] = diag;
    if (m + 1 <= L_) values_[offset(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * diag;
    for (int l = m + 2; l <= L_; ++l) {
      const std::size_t i = offset(l, m);
      values_[i] = a_coef_[i] * (x * values_[offset(l - 1, m)] - b_coef_[i] * values_[offset(l - 2, m)]);
    }
  }
}

void real_harmonics(int L, const Vec3& x, std::span<double> out) {
  if (out.size() < sh_count(L)) throw ParameterError("real_harmonics output too small");
  LegendreTable table(L);
  const double ct = std::clamp(x.z, -1.0, 1.0);
  const double st = std::hypot(x.x, x.y);
  table.compute(ct, st);
  const double phi = std::atan2(x.y, x.x);
  for (int l = 0; l <= L; ++l) {
    out[sh_index(l, 0)] = table(l, 0);
    for (int m = 1; m <= l; ++m) {
      const double base = std::numbers::sqrt2 * table(l, m);
      out[sh_index(l, m)] = base * std::cos(m * phi);
      out[sh_index(l, -m)] = base * std::sin(m * phi);
    }
  }
}

std::vector<double> real_harmonics(int L, const Vec3& x) {
  std::vector<double> out(sh_count(L));
  real_harmonics(L, x, out);
  return out;
}

}  // namespace mexneedlet
