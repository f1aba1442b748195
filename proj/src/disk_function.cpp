#include "hardy/disk_function.hpp"

#include "hardy/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

DiskFunction::DiskFunction(TaylorPolynomial t) : storage_(std::move(t)) { validate(); }
DiskFunction::DiskFunction(PoissonExtension p) : storage_(std::move(p)) { validate(); }

void DiskFunction::validate() {
  if (const auto* t = std::get_if<TaylorPolynomial>(&storage_)) {
    if (t->coeffs.empty()) {
      throw std::invalid_argument(
          "DiskFunction: Taylor polynomial needs at least one coefficient");
    }
    rows_ = t->coeffs.front().rows();
    cols_ = t->coeffs.front().cols();
    for (std::size_t m = 0; m < t->coeffs.size(); ++m) {
      const MatrixValue& c = t->coeffs[m];
      if (c.rows() != rows_ || c.cols() != cols_) {
        throw std::invalid_argument("DiskFunction: Taylor coefficient " +
                                    std::to_string(m) + " has a mismatched shape");
      }
      require_finite(c, "DiskFunction Taylor coefficient " + std::to_string(m));
    }
  } else {
    const auto& e = std::get<PoissonExtension>(storage_);
    if (e.quad_grid.n_points <= 0) {
      throw std::invalid_argument("DiskFunction: Poisson extension needs a grid");
    }
    rows_ = e.boundary.rows();
    cols_ = e.boundary.cols();
  }
}

DiskFunction make_poisson_extension(CircleFunction boundary, const CircleGrid& quad_grid) {
  std::shared_ptr<const ModalForm> modal;
  std::shared_ptr<const SampledFunction> samples;
  if (std::optional<ModalForm> m = modal_form(boundary, quad_grid)) {
    modal = std::make_shared<const ModalForm>(std::move(*m));
  } else {
    samples = std::make_shared<const SampledFunction>(sample(boundary, quad_grid));
  }
  return DiskFunction(PoissonExtension{std::move(boundary), quad_grid,
                                       std::move(modal), std::move(samples)});
}

MatrixValue eval_disk(const DiskFunction& h, Complex zeta) {
  const double r = std::abs(zeta);
  if (r >= 1.0) {
    throw std::domain_error("eval_disk: |zeta| must be < 1, got " + std::to_string(r));
  }
  if (h.is_taylor()) {
    const std::vector<MatrixValue>& c = h.as_taylor().coeffs;
    MatrixValue acc = c.back();
    for (std::size_t m = c.size() - 1; m-- > 0;) {
      acc = (acc * zeta + c[m]).eval();
    }
    return acc;
  }
  return strong_poisson(h.as_extension(), zeta);
}

}  // namespace hardy
