#include "hardy/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardy {

Complex CircleGrid::node_power(int j, long long k) const {
  const long long n = n_points;
  long long idx = (static_cast<long long>(j) * k) % n;
  if (idx < 0) idx += n;
  return nodes[static_cast<std::size_t>(idx)];
}

CircleGrid make_grid(int n_points) {
  if (n_points < 1) {
    throw std::invalid_argument("make_grid: n_points must be >= 1, got " +
                                std::to_string(n_points));
  }
  CircleGrid grid;
  grid.n_points = n_points;
  grid.nodes.reserve(static_cast<std::size_t>(n_points));
  grid.weights.assign(static_cast<std::size_t>(n_points), 1.0 / n_points);
  for (int j = 0; j < n_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_points;
    grid.nodes.push_back(std::polar(1.0, theta));
  }
  return grid;
}

int node_index(const CircleGrid& grid, Complex z) {
  // Nearest node by angle, then verify it actually matches.
  double theta = std::arg(z);
  if (theta < 0) theta += 2.0 * std::numbers::pi;
  const double step = 2.0 * std::numbers::pi / grid.n_points;
  int j = static_cast<int>(std::lround(theta / step)) % grid.n_points;
  if (j < 0) j += grid.n_points;
  if (std::abs(z - grid.nodes[static_cast<std::size_t>(j)]) <= 1e-12) {
    return j;
  }
  return -1;
}

RadiusLadder make_ladder(int levels) {
  if (levels < 1) {
    throw std::invalid_argument("make_ladder: levels must be >= 1, got " +
                                std::to_string(levels));
  }
  RadiusLadder ladder;
  ladder.levels = levels;
  ladder.radii.reserve(static_cast<std::size_t>(levels));
  for (int k = 1; k <= levels; ++k) {
    ladder.radii.push_back(1.0 - std::ldexp(1.0, -k));
  }
  return ladder;
}

}  // namespace hardy
