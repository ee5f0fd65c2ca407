#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "mexneedlet/geometry.hpp"
#include "mexneedlet/ring_layout.hpp"

namespace mexneedlet {

/// Smallest b a^j accepted by build_partition.
inline constexpr double kMinCellDiameter = 1e-3;
/// Scale below which the measure lower bound mu >= c0 (b a^j)^2 is claimed.
inline constexpr double kMeasureScaleThreshold = kPi / 2.0;

/// theta in [theta_lo, theta_hi], phi in [phi_lo, phi_hi]. A polar cap has
/// theta_lo = 0 (or theta_hi = pi) and the full longitude range.
struct BandRect {
  double theta_lo = 0.0;
  double theta_hi = kPi;
  double phi_lo = 0.0;
  double phi_hi = kTwoPi;
};

/// Greedy cell: B(center, inner) is contained in the cell, which lies in B(center, outer).
struct BallCell {
  double inner = 0.0;
  double outer = 0.0;
};

struct Cell {
  Vec3 center;
  double measure = 0.0;
  double diameter_bound = 0.0;
  std::variant<BandRect, BallCell> geometry;
};

/// Cells E_{j,k} for one scale. Band partitions are stored as latitude bands
/// with equal-measure longitude cells, so cell k is materialised on demand.
class ScalePartition {
 public:
  int j() const { return j_; }
  /// Required diameter bound b a^j (4t for greedy partitions).
  double target() const { return target_; }
  std::size_t size() const;
  Cell cell(std::size_t k) const;
  std::vector<Cell> cells() const;

  /// Index of the cell containing x; boundary points go to the lowest index.
  /// Returns size() for a greedy partition point that no cell covers.
  std::size_t locate(const Vec3& x) const;

  /// Cell centers weighted by cell measure.
  RingLayout sampling() const;

  double total_measure() const;
  double min_measure() const;
  double max_diameter_bound() const;
  /// min_k mu(E_k) / target^2.
  double achieved_c0() const;

  bool is_greedy() const { return std::holds_alternative<Greedy>(layout_); }

  // Greedy diagnostics (zero for band partitions).
  bool maximal_on_candidates() const;
  std::size_t uncovered_grid_nodes() const;

 private:
  struct Band {
    double theta_lo;
    double theta_hi;
    int count;
    double cell_measure;
    double diameter_bound;
    double center_theta;
  };
  struct Bands {
    std::vector<Band> bands;
    std::vector<std::size_t> offsets;
  };
  struct Greedy {
    double t;
    std::vector<Vec3> centers;
    std::vector<double> measures;
    bool maximal_on_candidates;
    std::size_t uncovered_grid_nodes;
  };

  friend ScalePartition build_partition(int j, double a, double b);
  friend ScalePartition greedy_ball_partition(double t, int candidates, int grid_rings);

  int j_ = 0;
  double target_ = 0.0;
  std::variant<Bands, Greedy> layout_;
};

/// Latitude-band partition with every certified cell diameter <= b a^j:
/// polar caps of radius b a^j / 2, bands of height <= b a^j / 2 split into equal
/// longitude cells. A cell's diameter is certified by the triangle inequality as
/// band height plus the parallel chord 2 asin(max sin theta * sin(dphi / 2)).
/// b a^j >= pi gives the single cell S^2. Throws SizeOverflowError when
/// b a^j < kMinCellDiameter.
ScalePartition build_partition(int j, double a, double b);

/// Maximal disjoint balls B(y_k, t) chosen greedily from a Fibonacci lattice,
/// turned into cells E_k with B(y_k, t) in E_k in B(y_k, 2t) by the recursive
/// set differences. Cell measures are quadrature sums of the label map on a
/// Gauss-Legendre x uniform-longitude grid with grid_rings latitudes.
ScalePartition greedy_ball_partition(double t, int candidates, int grid_rings = 400);

/// Fibonacci lattice of n nearly uniform points.
std::vector<Vec3> fibonacci_lattice(int n);

/// Cubature on S^2 exact for polynomials of degree <= m.
struct CubatureRule {
  int degree = 0;
  RingLayout layout;  // Gauss-Legendre latitudes x (m+1) longitudes
};

/// ceil((m+2)/2) Gauss-Legendre nodes in cos theta times m+1 uniform longitudes,
/// weight (Gauss weight) 2 pi / (m+1). Requires 0 <= m <= 512.
CubatureRule cubature_rule(int m);

}  // namespace mexneedlet
