#pragma once

#include "hardy/circle_function.hpp"
#include "hardy/disk_function.hpp"

#include <optional>
#include <vector>

namespace hardy {

// Largest radius at which Poisson evaluation is permitted; closer to the
// circle the kernel mass concentrates below any fixed grid resolution.
inline constexpr double kMaxPoissonRadius = 1.0 - 1e-6;

// n-th Fourier coefficient of f with respect to quadrature on `grid`:
//   (1/N) * sum_j f(z_j) * conj(z_j)^n.
// For a FourierPolynomial the quadrature value is computed in closed form by
// alias folding (sum of stored coefficients at modes congruent to n mod N),
// so absent modes come back exactly zero.
MatrixValue fourier_coefficient(const CircleFunction& f, int n, const CircleGrid& grid);

// Survey of the negative-frequency content of f over modes -tested_range..-1.
struct AnalyticityReport {
  int tested_range = 0;             // modes -tested_range..-1 were examined
  double max_negative_defect = 0.0; // largest op_norm among them
  int worst_mode = 0;               // mode attaining the maximum (0 if none)
};

// Measures how far f is from being analytic (all negative modes zero).
// tested_range >= 1.
AnalyticityReport analytic_defect(const CircleFunction& f, int tested_range,
                                  const CircleGrid& grid);

// Poisson kernel (1 - |zeta|^2) / |z - zeta|^2 for |zeta| < 1, |z| = 1.
double poisson_kernel(Complex zeta, Complex z);

// Fourier data of quadrature samples over one dense mode window, the common
// currency of the mode-wise Poisson path and the radial section code.
struct ModalForm {
  int min_mode = 0;
  int max_mode = 0;
  std::vector<MatrixValue> coeffs;  // coeffs[n - min_mode] is mode n
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;

  const MatrixValue& mode(int n) const { return coeffs[static_cast<std::size_t>(n - min_mode)]; }

  // sum_n mode(n) * damp(zeta, n) with damp = zeta^n for n >= 0 and
  // conj(zeta)^|n| for n < 0; the mode-wise Poisson integral.
  MatrixValue eval_harmonic(Complex zeta) const;
};

// Fourier modes of f's quadrature data on `grid`, when the representation
// pins down a band limit the grid resolves without aliasing (stored modes for
// a FourierPolynomial, declared band limit for a rule). Returns nullopt for
// sample tables and unlimited rules.
std::optional<ModalForm> modal_form(const CircleFunction& f, const CircleGrid& grid);

// Poisson integral of f at zeta (|zeta| <= kMaxPoissonRadius), entry by
// entry. Band-limited data resolved by the grid is evaluated mode-wise;
// everything else by the literal kernel-weighted quadrature sum.
MatrixValue poisson_integral(const CircleFunction& f, Complex zeta, const CircleGrid& grid);

// Strong (column-wise) Poisson integral: column x of the result is the
// Poisson integral of z -> f(z) * x. Assembled column by column and
// cross-checked against the entrywise route; the two must agree to 1e-13.
MatrixValue strong_poisson(const CircleFunction& f, Complex zeta, const CircleGrid& grid);
MatrixValue strong_poisson(const PoissonExtension& ext, Complex zeta);

// Restriction of h to the circle of radius r, sampled on `grid`:
// values[j] = h(r * z_j). 0 <= r < 1 (and r <= kMaxPoissonRadius for
// Poisson extensions).
SampledFunction radial_section(const DiskFunction& h, double r, const CircleGrid& grid);

}  // namespace hardy
