#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mexneedlet/harmonic_field.hpp"
#include "mexneedlet/ring_layout.hpp"

namespace mexneedlet {

/// One scale of a sampled frame: elements
///   phi_k = sqrt(w_k) sum_l m_l sum_q Y_{lq}(x_k) Y_{lq}
/// for the nodes x_k and weights w_k of `layout` and the degree multiplier m_l.
struct SampledScale {
  int j = 0;
  RingLayout layout;
  std::vector<double> multiplier;  // m_0, ..., m_L
};

/// Subset of frame indices: a closed scale window and an optional node predicate.
struct FrameSelection {
  std::optional<int> j_lo;
  std::optional<int> j_hi;
  std::function<bool(int j, const Vec3& x)> keep;

  bool includes_scale(int j) const {
    return (!j_lo || j >= *j_lo) && (!j_hi || j <= *j_hi);
  }
};

/// Analysis coefficients <F, phi_{j,k}> grouped by scale.
struct ScaleCoefficients {
  int j = 0;
  std::vector<double> values;
};
using FrameCoefficients = std::vector<ScaleCoefficients>;

/// Sum of squares of all coefficients.
double coefficient_energy(const FrameCoefficients& coefficients);

/// Frame on the band-limited subspace of degree <= L, evaluated exactly in the
/// spectral domain.
///
/// Work is organised by latitude ring. On a ring with count > 2L nodes the sums
/// over nodes of products of degree-<=L trigonometric polynomials reduce to
/// their Fourier coefficients (discrete orthogonality), so energies and the
/// adjoint cost O(L^2) per ring regardless of the node count. Smaller rings,
/// and rings cut by a selection predicate, are summed node by node.
class SampledFrame {
 public:
  SampledFrame(int band_limit, std::vector<SampledScale> scales);

  int band_limit() const { return L_; }
  std::span<const SampledScale> scales() const { return scales_; }
  const SampledScale& scale(int j) const;
  int j_min() const { return scales_.front().j; }
  int j_max() const { return scales_.back().j; }
  std::size_t element_count() const;

  /// phi_{j,k} truncated to degree L.
  HarmonicField element(int j, std::size_t k) const;

  /// Coefficients <F, phi_{j,k}> for every node, node by node.
  FrameCoefficients analyze(const HarmonicField& field) const;

  /// <S_I F, F> = sum over selected (j,k) of <F, phi_{j,k}>^2, one entry per field.
  std::vector<double> energies(std::span<const HarmonicField> fields,
                               const FrameSelection& selection = {}) const;
  double energy(const HarmonicField& field, const FrameSelection& selection = {}) const;

  /// S_I F = sum over selected (j,k) of <F, phi_{j,k}> phi_{j,k}, projected to degree <= L.
  HarmonicField apply(const HarmonicField& field, const FrameSelection& selection = {}) const;

  /// sum_k c_k phi_{j,k} for given per-node coefficients of scale j.
  HarmonicField synthesize(int j, std::span<const double> coefficients) const;

  /// Forces the node-by-node path everywhere (used to cross-check the fast path).
  void set_direct_only(bool direct) { direct_only_ = direct; }

 private:
  void check_field(const HarmonicField& field) const;

  int L_;
  std::vector<SampledScale> scales_;
  bool direct_only_ = false;
};

}  // namespace mexneedlet
