#pragma once

#include "hardy/boundary.hpp"
#include "hardy/gallery.hpp"

#include <span>
#include <string>
#include <vector>

namespace hardy {

// One comparison at one resolution. `ok` records every check that applies to
// this row (tolerance, contraction bound, trend), so the report verdict is
// just the conjunction of row flags.
struct ReportRow {
  std::string label;
  int n_points = 0;
  int ladder_k = 0;
  int dim = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  bool ok = true;
};

struct VerificationReport {
  std::string claim;
  double tolerance = 0.0;
  std::vector<ReportRow> rows;
  bool verdict = false;
  std::string notes;
};

// Recomputes the verdict from the rows alone (conjunction of row flags);
// idempotent on serialized reports.
bool re_verdict(const VerificationReport& report);

// A grid size paired with a ladder depth.
struct Resolution {
  int n_points = 0;
  int ladder_k = 0;
};

// Norm equality between f on the circle and its Poisson extension on the
// disk, across a resolution ladder. Requires near-analytic input (negative
// modes below 1e-10). Verdict: relative deviation at the finest resolution
// <= tol, deviations nonincreasing over the last three rows, and the
// contraction inequality lhs <= rhs + 1e-8 in every row.
VerificationReport verify_isometry(const CircleFunction& f, Exponent p,
                                   std::span<const Resolution> resolutions,
                                   double tol = 1e-3);

// Contraction of the Poisson extension at each ladder radius, for arbitrary
// (possibly non-analytic) input.
VerificationReport verify_contraction_nonanalytic(const CircleFunction& f, Exponent p,
                                                  const RadiusLadder& ladder,
                                                  const CircleGrid& grid);

// Transpose identity: the strong Poisson integral of the transposed function
// equals the transpose of the strong Poisson integral, probe by probe.
VerificationReport verify_adjoint_identity(const CircleFunction& f,
                                           std::span<const Complex> probe_points,
                                           const CircleGrid& grid);

// Extension followed by boundary extraction recovers the input.
VerificationReport verify_boundary_roundtrip(const CircleFunction& f,
                                             const CircleGrid& grid,
                                             const RadiusLadder& ladder, double tol);

// Three strict-containment gap series across dimensions: the separability
// witness of the rotation symbol (grows linearly), the arc-multiplier
// sot-vs-strong ratio (grows like the harmonic sum), and the
// evaluation-functional disk-vs-strong ratio (grows like sqrt(d)).
VerificationReport verify_containment_gaps(std::span<const int> dims);

}  // namespace hardy
