#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mexneedlet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Point of R^3; used for unit vectors on S^2.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

inline double dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
inline Vec3 operator*(double s, const Vec3& u) { return {s * u.x, s * u.y, s * u.z}; }

inline double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

inline Vec3 normalized(const Vec3& u) {
  const double n = norm(u);
  return {u.x / n, u.y / n, u.z / n};
}

/// Unit vector at colatitude theta, longitude phi.
inline Vec3 from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

inline double colatitude(const Vec3& u) { return std::atan2(std::hypot(u.x, u.y), u.z); }

/// Longitude in [0, 2pi).
inline double longitude(const Vec3& u) {
  double phi = std::atan2(u.y, u.x);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

/// Great-circle distance; atan2 form is accurate for nearly (anti)parallel vectors.
inline double geodesic_distance(const Vec3& u, const Vec3& v) {
  const Vec3 c = cross(u, v);
  return std::atan2(norm(c), dot(u, v));
}

/// Area of a geodesic cap of angular radius rho.
inline double cap_area(double rho) { return kTwoPi * (1.0 - std::cos(std::min(rho, kPi))); }

}  // namespace mexneedlet
