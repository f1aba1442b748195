#include "hardy/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

double BoundaryResult::max_residual() const {
  double best = 0.0;
  for (double v : per_node_residual.values) best = std::max(best, v);
  return best;
}

BoundaryResult radial_boundary(const DiskFunction& h, const CircleGrid& grid,
                               const RadiusLadder& ladder, double tol, bool strict) {
  if (ladder.levels < 3) {
    throw std::invalid_argument("radial_boundary: ladder needs at least 3 levels, got " +
                                std::to_string(ladder.levels));
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("radial_boundary: tol must be positive");
  }

  // One section per rung; everything below reuses these.
  std::vector<SampledFunction> sections;
  sections.reserve(ladder.radii.size());
  for (double r : ladder.radii) {
    sections.push_back(radial_section(h, r, grid));
  }

  const int K = ladder.levels;
  const std::size_t n = static_cast<std::size_t>(grid.n_points);

  BoundaryResult result;
  result.ladder_used = ladder;
  result.basis_dimension = static_cast<int>(h.cols());
  result.boundary.grid = grid;
  result.boundary.values.reserve(n);
  result.per_node_residual.grid = grid;
  result.per_node_residual.values.reserve(n);

  for (std::size_t j = 0; j < n; ++j) {
    // Richardson tableau in t = 1 - r, which halves rung to rung. The sweep
    // runs in place; after sweep m, T[i] (i >= m) holds the column-m value,
    // so at the end T[K-1] and T[K-2] are the last two diagonal entries.
    std::vector<MatrixValue> T;
    T.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) T.push_back(sections[static_cast<std::size_t>(k)].values[j]);
    for (int m = 1; m < K; ++m) {
      const double denom = std::ldexp(1.0, m) - 1.0;  // 2^m - 1
      for (int i = K - 1; i >= m; --i) {
        T[static_cast<std::size_t>(i)] +=
            (T[static_cast<std::size_t>(i)] - T[static_cast<std::size_t>(i - 1)]) / denom;
      }
    }
    const double residual =
        K >= 2 ? op_norm(T[static_cast<std::size_t>(K - 1)] - T[static_cast<std::size_t>(K - 2)])
               : 0.0;
    result.boundary.values.push_back(std::move(T.back()));
    result.per_node_residual.values.push_back(residual);
  }

  result.radial_norm_proxy.grid = grid;
  result.radial_norm_proxy.values.assign(n, 0.0);
  for (int k = std::max(0, K - 3); k < K; ++k) {
    const SampledFunction& section = sections[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < n; ++j) {
      result.radial_norm_proxy.values[j] =
          std::max(result.radial_norm_proxy.values[j], op_norm(section.values[j]));
    }
  }

  if (strict) {
    const double worst = result.max_residual();
    if (worst > tol) {
      throw convergence_error(
          "radial_boundary: extrapolation residual " + std::to_string(worst) +
          " exceeds tolerance " + std::to_string(tol));
    }
  }
  return result;
}

std::vector<ConvergenceRow> poisson_convergence_report(const CircleFunction& f,
                                                       Exponent p,
                                                       const RadiusLadder& ladder,
                                                       const CircleGrid& grid) {
  const DiskFunction ext = make_poisson_extension(f, grid);
  const SampledFunction target = sample(f, grid);

  std::vector<ConvergenceRow> rows;
  rows.reserve(ladder.radii.size());
  for (double r : ladder.radii) {
    const SampledFunction section = radial_section(ext, r, grid);
    ScalarSampled mags;
    mags.grid = grid;
    mags.values.reserve(target.values.size());
    double worst = 0.0;
    for (std::size_t j = 0; j < target.values.size(); ++j) {
      const double dev = op_norm(section.values[j] - target.values[j]);
      mags.values.push_back(dev);
      worst = std::max(worst, dev);
    }
    ConvergenceRow row;
    row.r = r;
    row.max_pointwise_deviation = worst;
    if (!p.is_inf()) {
      row.lp_deviation = lp_scalar_norm(mags, p);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hardy
