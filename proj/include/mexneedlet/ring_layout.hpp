#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mexneedlet/geometry.hpp"

namespace mexneedlet {

/// count equally spaced weighted points on one circle of latitude:
/// node n sits at (theta, phi0 + 2 pi n / count).
struct Ring {
  double theta = 0.0;
  double phi0 = 0.0;
  int count = 1;
  double weight = 0.0;  // per node
};

/// Weighted point sets organised by latitude rings. Partitions (weight = cell
/// measure) and cubature rules (weight = cubature weight) share this form; a
/// scattered point set is a layout of single-node rings.
class RingLayout {
 public:
  void add(const Ring& ring);

  std::span<const Ring> rings() const { return rings_; }
  std::size_t ring_count() const { return rings_.size(); }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }

  /// Global index of the first node of ring r.
  std::size_t ring_offset(std::size_t r) const { return offsets_[r]; }

  Vec3 node(std::size_t k) const;
  double weight(std::size_t k) const;
  double total_weight() const;

 private:
  std::size_t ring_of(std::size_t k) const;

  std::vector<Ring> rings_;
  std::vector<std::size_t> offsets_{0};
};

}  // namespace mexneedlet
