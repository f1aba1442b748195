#pragma once

#include "hardy/circle_function.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace hardy {

struct ModalForm;  // defined in transforms.hpp

// Analytic polynomial  h(zeta) = sum_m coeffs[m] * zeta^m  on the open disk.
struct TaylorPolynomial {
  std::vector<MatrixValue> coeffs;  // index = power, at least one entry
};

// Harmonic extension of a circle function to the open disk, evaluated by the
// Poisson integral against `quad_grid`. When the boundary data is band-limited
// and the grid resolves every mode, `modal` caches the Fourier coefficients of
// the quadrature data; evaluation then damps each mode radially, which is
// numerically identical to the quadrature integral but free of the kernel
// truncation error. `modal` is null for data the grid cannot resolve; those
// fall back to the literal kernel-weighted sum over `samples`.
struct PoissonExtension {
  CircleFunction boundary;
  CircleGrid quad_grid;
  std::shared_ptr<const ModalForm> modal;
  std::shared_ptr<const SampledFunction> samples;
};

// A matrix-valued function on the open unit disk.
class DiskFunction {
public:
  using Storage = std::variant<TaylorPolynomial, PoissonExtension>;

  DiskFunction(TaylorPolynomial t);    // NOLINT(google-explicit-constructor)
  DiskFunction(PoissonExtension p);    // NOLINT(google-explicit-constructor)

  const Storage& storage() const { return storage_; }
  bool is_taylor() const { return std::holds_alternative<TaylorPolynomial>(storage_); }
  bool is_extension() const { return std::holds_alternative<PoissonExtension>(storage_); }
  const TaylorPolynomial& as_taylor() const { return std::get<TaylorPolynomial>(storage_); }
  const PoissonExtension& as_extension() const { return std::get<PoissonExtension>(storage_); }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

private:
  void validate();

  Storage storage_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
};

// Wraps boundary data as a PoissonExtension over `quad_grid`, computing the
// modal cache when the representation allows it.
DiskFunction make_poisson_extension(CircleFunction boundary, const CircleGrid& quad_grid);

// Value of h at zeta with |zeta| < 1. Poisson extensions are additionally
// restricted to |zeta| <= 1 - 1e-6, where the quadrature is trustworthy.
MatrixValue eval_disk(const DiskFunction& h, Complex zeta);

}  // namespace hardy
