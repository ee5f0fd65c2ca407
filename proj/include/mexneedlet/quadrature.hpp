#pragma once

#include <vector>

namespace mexneedlet {

/// Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, exact for polynomials of degree <= 2n - 1.
GaussLegendre gauss_legendre(int n);

}  // namespace mexneedlet
