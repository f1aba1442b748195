#pragma once

#include "hardy/types.hpp"

#include <vector>

namespace hardy {

// Uniform quadrature grid on the unit circle: the n-th roots of unity with
// equal weights summing to 1 (normalized Lebesgue measure). The node table
// doubles as an exact power table: nodes[(j*n) mod n_points] = nodes[j]^n.
struct CircleGrid {
  int n_points = 0;
  std::vector<Complex> nodes;
  std::vector<double> weights;

  // nodes[j]^k via index arithmetic on the root table (exact angles).
  Complex node_power(int j, long long k) const;
};

// Builds the grid of n_points-th roots of unity. n_points >= 1.
CircleGrid make_grid(int n_points);

// Index of the grid node within 1e-12 of z, or -1 if z is off-grid.
int node_index(const CircleGrid& grid, Complex z);

// Dyadic radius ladder r_k = 1 - 2^-k for k = 1..levels, increasing toward 1.
// The uniform spacing in t = 1 - r (ratio 2) is what Richardson extrapolation
// along the ladder relies on.
struct RadiusLadder {
  int levels = 0;
  std::vector<double> radii;
};

// Builds the ladder with the given number of rungs. levels >= 1.
RadiusLadder make_ladder(int levels);

}  // namespace hardy
