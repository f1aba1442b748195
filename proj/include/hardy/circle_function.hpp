#pragma once

#include "hardy/grid.hpp"
#include "hardy/types.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hardy {

// Matrix samples at every node of a fixed grid. values[j] belongs to nodes[j].
struct SampledFunction {
  CircleGrid grid;
  std::vector<MatrixValue> values;
};

// Finite two-sided Fourier sum  f(z) = sum_n coeffs[n] * z^n.
// All coefficient matrices share one shape; the map may omit any mode
// (omitted means the zero matrix). Must contain at least one entry so the
// shape is determined.
struct FourierPolynomial {
  std::map<int, MatrixValue> coeffs;

  int min_mode() const { return coeffs.begin()->first; }
  int max_mode() const { return coeffs.rbegin()->first; }
  // Largest |n| over stored modes.
  int degree() const;
};

// One constant piece of a piecewise-constant rule: the half-open angular
// cell [theta_lo, theta_hi) in [0, 2*pi), carrying a fixed matrix value.
struct ArcCell {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  MatrixValue value;
};

// Disjoint cells covering [0, 2*pi). Lets integration routines use exact arc
// measures instead of node counting, which matters when cells shrink much
// faster than any affordable grid spacing.
struct ArcPartition {
  std::vector<ArcCell> cells;

  // Cell containing angle theta (normalized into [0, 2*pi)).
  const ArcCell& locate(double theta) const;
  // Normalized measure (theta_hi - theta_lo) / (2*pi) of cell i.
  double measure(std::size_t i) const;
};

// Closed-form rule z -> value. `bandlimit`, when set, promises the rule is a
// trigonometric polynomial with modes in [-bandlimit, bandlimit]; `arcs`,
// when set, promises the rule is piecewise constant on that partition.
struct RuleFunction {
  std::string name;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::function<MatrixValue(Complex)> rule;
  std::optional<int> bandlimit;
  std::shared_ptr<const ArcPartition> arcs;
};

// A matrix-valued function on the unit circle in one of three
// representations: a sample table, a finite Fourier sum, or a rule.
class CircleFunction {
public:
  using Storage = std::variant<SampledFunction, FourierPolynomial, RuleFunction>;

  CircleFunction(SampledFunction s);       // NOLINT(google-explicit-constructor)
  CircleFunction(FourierPolynomial f);     // NOLINT(google-explicit-constructor)
  CircleFunction(RuleFunction r);          // NOLINT(google-explicit-constructor)

  const Storage& storage() const { return storage_; }

  bool is_sampled() const { return std::holds_alternative<SampledFunction>(storage_); }
  bool is_fourier() const { return std::holds_alternative<FourierPolynomial>(storage_); }
  bool is_rule() const { return std::holds_alternative<RuleFunction>(storage_); }

  const SampledFunction& as_sampled() const { return std::get<SampledFunction>(storage_); }
  const FourierPolynomial& as_fourier() const { return std::get<FourierPolynomial>(storage_); }
  const RuleFunction& as_rule() const { return std::get<RuleFunction>(storage_); }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

private:
  void validate();

  Storage storage_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
};

// Value of f at a point z with |z| = 1 (checked to 1e-12). A SampledFunction
// can only be evaluated at its own grid nodes; elsewhere it throws
// not_representable_error.
MatrixValue eval_circle(const CircleFunction& f, Complex z);

// Samples f at every node of `grid`. For a SampledFunction, the grid must be
// the one the samples live on.
SampledFunction sample(const CircleFunction& f, const CircleGrid& grid);

// Node-wise difference of two functions sampled on the same grid.
SampledFunction sample_difference(const CircleFunction& a, const CircleFunction& b,
                                  const CircleGrid& grid);

}  // namespace hardy
