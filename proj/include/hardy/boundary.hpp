#pragma once

#include "hardy/norms.hpp"

#include <optional>
#include <vector>

namespace hardy {

// Outcome of radial boundary extraction.
struct BoundaryResult {
  SampledFunction boundary;          // extrapolated boundary values per node
  ScalarSampled per_node_residual;   // last extrapolation increment per node
  RadiusLadder ladder_used;
  int basis_dimension = 0;           // columns probed; the finite stand-in for
                                     // a dense vector set
  // Heuristic stand-in for the radial limit-inferior of N(h_r): the max of
  // the section norms over the top three ladder rungs, per node.
  ScalarSampled radial_norm_proxy;

  double max_residual() const;
};

// Extrapolates h(r z_j) to r = 1 at every grid node by Richardson
// extrapolation in (1 - r) along the dyadic ladder (spacing halves rung to
// rung, so the classical ratio-2 tableau applies). Residuals above tol are
// reported in the result; with strict = true they raise convergence_error
// instead. ladder.levels >= 3.
BoundaryResult radial_boundary(const DiskFunction& h, const CircleGrid& grid,
                               const RadiusLadder& ladder, double tol,
                               bool strict = false);

// One rung of the Poisson convergence diagnostic.
struct ConvergenceRow {
  double r = 0.0;
  std::optional<double> lp_deviation;  // absent when p = inf
  double max_pointwise_deviation = 0.0;
};

// Deviation between the radial sections of the Poisson extension of f and f
// itself, per ladder rung. The L^p column is reported for finite p only.
std::vector<ConvergenceRow> poisson_convergence_report(const CircleFunction& f,
                                                       Exponent p,
                                                       const RadiusLadder& ladder,
                                                       const CircleGrid& grid);

}  // namespace hardy
