#include "mexneedlet/ring_layout.hpp"

#include <algorithm>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

void RingLayout::add(const Ring& ring) {
  if (ring.count < 1) throw ParameterError("ring needs at least one node");
  rings_.push_back(ring);
  offsets_.push_back(offsets_.back() + static_cast<std::size_t>(ring.count));
}

std::size_t RingLayout::ring_of(std::size_t k) const {
  if (k >= size()) throw ParameterError("node index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

Vec3 RingLayout::node(std::size_t k) const {
  const std::size_t r = ring_of(k);
  const Ring& ring = rings_[r];
  const double n = static_cast<double>(k - offsets_[r]);
  return from_angles(ring.theta, ring.phi0 + kTwoPi * n / ring.count);
}

double RingLayout::weight(std::size_t k) const { return rings_[ring_of(k)].weight; }

double RingLayout::total_weight() const {
  double sum = 0.0;
  for (const Ring& ring : rings_) sum += ring.weight * ring.count;
  return sum;
}

}  // namespace mexneedlet
