#pragma once

#include <doctest.h>

#include <hardy/gallery.hpp>
#include <hardy/norms.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

// Helpers shared by the test binaries. Everything here is written against
// definitions only, independently of the library's internal evaluation
// paths, so it can serve as an oracle for them.
namespace checks {

using hardy::Complex;
using hardy::MatrixValue;

inline MatrixValue scalar(Complex v) {
  MatrixValue m(1, 1);
  m(0, 0) = v;
  return m;
}

inline MatrixValue ident(int n) { return MatrixValue::Identity(n, n); }

// Fourier polynomial with scalar (1x1) coefficients.
inline hardy::CircleFunction scalar_poly(const std::map<int, Complex>& modes) {
  std::map<int, MatrixValue> coeffs;
  for (const auto& [n, v] : modes) coeffs.emplace(n, scalar(v));
  return hardy::make_matrix_polynomial(coeffs);
}

// Literal Poisson quadrature on an n_fine-point uniform grid, straight from
// the kernel formula. Slowly convergent near the boundary but unimpeachable
// at moderate radii once n_fine is large.
inline MatrixValue dense_poisson(const hardy::CircleFunction& f, Complex zeta, int n_fine) {
  MatrixValue acc = MatrixValue::Zero(f.rows(), f.cols());
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < n_fine; ++j) {
    const Complex z = std::polar(1.0, two_pi * j / n_fine);
    const double kernel = (1.0 - std::norm(zeta)) / std::norm(z - zeta);
    acc += (kernel / n_fine) * hardy::eval_circle(f, z);
  }
  return acc;
}

// Harmonic value of a two-sided coefficient table at zeta: analytic modes
// damp by zeta^n, anti-analytic modes by conj(zeta)^|n|.
inline MatrixValue harmonic_value(const std::map<int, MatrixValue>& coeffs, Complex zeta) {
  MatrixValue acc = MatrixValue::Zero(coeffs.begin()->second.rows(), coeffs.begin()->second.cols());
  for (const auto& [n, a] : coeffs) {
    const Complex damp = n >= 0 ? hardy::ipow(zeta, n) : hardy::ipow(std::conj(zeta), -n);
    acc += damp * a;
  }
  return acc;
}

// Deterministic 2x2 test polynomial with modes -3..3: seeded analytic
// content, more seeded content mirrored to the negative modes, and a
// constant term.
inline hardy::CircleFunction two_sided_poly(std::uint64_t seed_pos = 7,
                                            std::uint64_t seed_neg = 8) {
  std::map<int, MatrixValue> coeffs =
      hardy::make_random_matrix_polynomial(2, 3, seed_pos).as_fourier().coeffs;
  const auto negatives =
      hardy::make_random_matrix_polynomial(2, 3, seed_neg).as_fourier().coeffs;
  for (const auto& [n, c] : negatives) coeffs.emplace(-n, c);
  coeffs.emplace(0, 0.5 * ident(2));
  return hardy::make_matrix_polynomial(coeffs);
}

// Brute-force Gram matrix  sum_j w_j f(z_j)^H f(z_j)  of samples.
inline MatrixValue gram_of(const hardy::SampledFunction& s) {
  MatrixValue g = MatrixValue::Zero(s.values.front().cols(), s.values.front().cols());
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    g += s.grid.weights[j] * (s.values[j].adjoint() * s.values[j]);
  }
  return g;
}

inline double harmonic_sum(int d) {
  double h = 0.0;
  for (int n = 1; n <= d; ++n) h += 1.0 / n;
  return h;
}

// Norm of the evaluation-functional row (1, rz, ..., (rz)^{d-1}); depends on
// |rz| = r only.
inline double eval_row_norm(int d, double r) {
  return std::sqrt((1.0 - std::pow(r, 2 * d)) / (1.0 - r * r));
}

}  // namespace checks
