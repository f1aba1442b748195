#pragma once

#include "hardy/transforms.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hardy {

// A Lebesgue exponent: either a finite value >= 1 or infinity.
class Exponent {
public:
  Exponent() = default;  // p = 2
  explicit Exponent(double p);
  static Exponent inf();
  // Accepts "inf" (case-insensitive) or a decimal literal >= 1.
  static Exponent parse(std::string_view text);

  bool is_inf() const { return inf_; }
  // Finite value; call only when !is_inf().
  double value() const;
  std::string str() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

private:
  double p_ = 2.0;
  bool inf_ = false;
};

// Scalar samples over a grid (e.g. pointwise operator norms).
struct ScalarSampled {
  CircleGrid grid;
  std::vector<double> values;
};

// Operator norm (largest singular value) of a matrix, via full SVD.
double op_norm(const MatrixValue& a);

// j -> operator norm of f at node j.
ScalarSampled pointwise_norm(const CircleFunction& f, const CircleGrid& grid);

// L^p norm of scalar samples against the grid weights; p = inf takes the max.
double lp_scalar_norm(const ScalarSampled& s, Exponent p);

// L^p norm of the pointwise operator norm of f. Piecewise-constant rules with
// an arc partition are integrated with exact arc measures; everything else by
// grid quadrature.
double lp_sot_norm(const CircleFunction& f, Exponent p, const CircleGrid& grid);

// Norms of the radial sections of a disk function along a ladder.
struct NormProfile {
  Exponent p;
  std::vector<std::pair<double, double>> per_radius;  // (r_k, section norm)
  double final_value = 0.0;                           // value at the top rung
};

// Disk-space norm: L^p norms of N(h_r) for each ladder radius; the profile is
// nondecreasing in r for analytic h and final_value approximates the sup.
NormProfile hp_disk_norm(const DiskFunction& h, Exponent p, const RadiusLadder& ladder,
                         const CircleGrid& grid);

// Strong L^2 norm: largest eigenvalue (square root) of the Gram matrix
// G = integral of f(z)^H f(z). Exact for band-limited f when the grid
// resolves the product modes (n_points >= 2*degree + 2).
double l2_strong_norm(const CircleFunction& f, const CircleGrid& grid);

// Strong L^2 norm of radial sections, maximized over the ladder.
double l2_strong_disk_norm(const DiskFunction& h, const RadiusLadder& ladder,
                           const CircleGrid& grid);

// Lower bound for the strong L^p norm: the best column norm ||f(.) x||_{L^p}
// over canonical probes and seeded random unit probes. n_probe >= 1.
double lp_strong_norm_estimate(const CircleFunction& f, Exponent p, int n_probe,
                               std::uint64_t seed, const CircleGrid& grid);

}  // namespace hardy
