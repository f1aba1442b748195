#include "hardy/transforms.hpp"

#include "hardy/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

namespace {

void require_interior(Complex zeta, const char* where) {
  const double r = std::abs(zeta);
  if (r > kMaxPoissonRadius) {
    throw std::domain_error(std::string(where) + ": |zeta| = " + std::to_string(r) +
                            " exceeds the evaluation bound " +
                            std::to_string(kMaxPoissonRadius));
  }
}

// Radial damping factors for one mode window: damp(zeta, n) = zeta^n for
// n >= 0 and conj(zeta)^|n| for n < 0, built incrementally.
std::vector<Complex> damping_factors(Complex zeta, int min_mode, int max_mode) {
  std::vector<Complex> damp(static_cast<std::size_t>(max_mode - min_mode + 1));
  const int pos = std::max(max_mode, 0);
  const int neg = std::max(-min_mode, 0);
  std::vector<Complex> up(static_cast<std::size_t>(pos) + 1);
  std::vector<Complex> down(static_cast<std::size_t>(neg) + 1);
  up[0] = down[0] = Complex(1.0, 0.0);
  for (int k = 1; k <= pos; ++k) up[static_cast<std::size_t>(k)] = up[static_cast<std::size_t>(k - 1)] * zeta;
  const Complex zbar = std::conj(zeta);
  for (int k = 1; k <= neg; ++k) down[static_cast<std::size_t>(k)] = down[static_cast<std::size_t>(k - 1)] * zbar;
  for (int n = min_mode; n <= max_mode; ++n) {
    damp[static_cast<std::size_t>(n - min_mode)] =
        n >= 0 ? up[static_cast<std::size_t>(n)] : down[static_cast<std::size_t>(-n)];
  }
  return damp;
}

// Literal kernel-weighted quadrature sum over a sample table, entry by entry.
MatrixValue poisson_literal(const SampledFunction& s, Complex zeta) {
  MatrixValue acc = MatrixValue::Zero(s.values.front().rows(), s.values.front().cols());
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    acc += (s.grid.weights[j] * poisson_kernel(zeta, s.grid.nodes[j])) * s.values[j];
  }
  return acc;
}

// Column-wise assembly of the same literal sum: column c is the Poisson
// integral of the vector function z -> f(z) * e_c.
MatrixValue poisson_literal_columns(const SampledFunction& s, Complex zeta) {
  const Eigen::Index rows = s.values.front().rows();
  const Eigen::Index cols = s.values.front().cols();
  MatrixValue out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(rows);
    for (std::size_t j = 0; j < s.values.size(); ++j) {
      col += (s.grid.weights[j] * poisson_kernel(zeta, s.grid.nodes[j])) * s.values[j].col(c);
    }
    out.col(c) = col;
  }
  return out;
}

MatrixValue poisson_modal_columns(const ModalForm& m, Complex zeta) {
  const std::vector<Complex> damp = damping_factors(zeta, m.min_mode, m.max_mode);
  MatrixValue out(m.rows, m.cols);
  for (Eigen::Index c = 0; c < m.cols; ++c) {
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(m.rows);
    for (std::size_t k = 0; k < m.coeffs.size(); ++k) {
      col += damp[k] * m.coeffs[k].col(c);
    }
    out.col(c) = col;
  }
  return out;
}

MatrixValue strong_poisson_checked(const ModalForm* modal,
                                   const SampledFunction* samples, Complex zeta) {
  MatrixValue columnwise, entrywise;
  if (modal) {
    columnwise = poisson_modal_columns(*modal, zeta);
    entrywise = modal->eval_harmonic(zeta);
  } else {
    columnwise = poisson_literal_columns(*samples, zeta);
    entrywise = poisson_literal(*samples, zeta);
  }
  const double dev = max_abs_diff(columnwise, entrywise);
  if (dev > 1e-13 * (1.0 + max_abs(entrywise))) {
    throw std::logic_error(
        "strong_poisson: column-wise and entry-wise assemblies disagree by " +
        std::to_string(dev));
  }
  return columnwise;
}

}  // namespace

MatrixValue fourier_coefficient(const CircleFunction& f, int n, const CircleGrid& grid) {
  if (f.is_fourier()) {
    // Quadrature on N nodes folds mode m onto mode n exactly when
    // m == n (mod N); sum those stored coefficients in closed form.
    const FourierPolynomial& p = f.as_fourier();
    MatrixValue acc = MatrixValue::Zero(f.rows(), f.cols());
    const long long N = grid.n_points;
    for (const auto& [m, a] : p.coeffs) {
      if (((static_cast<long long>(m) - n) % N) == 0) acc += a;
    }
    return acc;
  }
  const SampledFunction s = sample(f, grid);
  MatrixValue acc = MatrixValue::Zero(f.rows(), f.cols());
  for (int j = 0; j < grid.n_points; ++j) {
    // conj(z_j^n) taken from the node table, so the twiddle angles are exact.
    acc += s.values[static_cast<std::size_t>(j)] *
           (s.grid.weights[static_cast<std::size_t>(j)] * std::conj(grid.node_power(j, n)));
  }
  return acc;
}

AnalyticityReport analytic_defect(const CircleFunction& f, int tested_range,
                                  const CircleGrid& grid) {
  if (tested_range < 1) {
    throw std::invalid_argument("analytic_defect: tested_range must be >= 1, got " +
                                std::to_string(tested_range));
  }
  AnalyticityReport report;
  report.tested_range = tested_range;
  for (int n = -tested_range; n <= -1; ++n) {
    const double mag = op_norm(fourier_coefficient(f, n, grid));
    if (mag > report.max_negative_defect) {
      report.max_negative_defect = mag;
      report.worst_mode = n;
    }
  }
  return report;
}

double poisson_kernel(Complex zeta, Complex z) {
  const double r = std::abs(zeta);
  if (r >= 1.0) {
    throw std::domain_error("poisson_kernel: |zeta| must be < 1, got " + std::to_string(r));
  }
  const double denom = std::norm(z - zeta);
  return (1.0 - r * r) / denom;
}

MatrixValue ModalForm::eval_harmonic(Complex zeta) const {
  const std::vector<Complex> damp = damping_factors(zeta, min_mode, max_mode);
  MatrixValue acc = MatrixValue::Zero(rows, cols);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    acc += damp[k] * coeffs[k];
  }
  return acc;
}

std::optional<ModalForm> modal_form(const CircleFunction& f, const CircleGrid& grid) {
  ModalForm m;
  m.rows = f.rows();
  m.cols = f.cols();
  if (f.is_fourier()) {
    const FourierPolynomial& p = f.as_fourier();
    const int deg = p.degree();
    if (grid.n_points < 2 * deg + 2) return std::nullopt;  // grid would alias
    m.min_mode = p.min_mode();
    m.max_mode = p.max_mode();
    m.coeffs.assign(static_cast<std::size_t>(m.max_mode - m.min_mode + 1),
                    MatrixValue::Zero(m.rows, m.cols));
    for (const auto& [n, a] : p.coeffs) {
      m.coeffs[static_cast<std::size_t>(n - m.min_mode)] = a;
    }
    return m;
  }
  if (f.is_rule()) {
    const RuleFunction& r = f.as_rule();
    if (!r.bandlimit) return std::nullopt;
    const int M = *r.bandlimit;
    if (grid.n_points < 2 * M + 2) return std::nullopt;
    const SampledFunction s = sample(f, grid);
    m.min_mode = -M;
    m.max_mode = M;
    m.coeffs.reserve(static_cast<std::size_t>(2 * M + 1));
    for (int n = -M; n <= M; ++n) {
      MatrixValue acc = MatrixValue::Zero(m.rows, m.cols);
      for (int j = 0; j < grid.n_points; ++j) {
        acc += s.values[static_cast<std::size_t>(j)] *
               (s.grid.weights[static_cast<std::size_t>(j)] * std::conj(grid.node_power(j, n)));
      }
      m.coeffs.push_back(std::move(acc));
    }
    return m;
  }
  return std::nullopt;  // sample tables carry no band-limit promise
}

MatrixValue poisson_integral(const CircleFunction& f, Complex zeta, const CircleGrid& grid) {
  require_interior(zeta, "poisson_integral");
  if (const std::optional<ModalForm> m = modal_form(f, grid)) {
    return m->eval_harmonic(zeta);
  }
  return poisson_literal(sample(f, grid), zeta);
}

MatrixValue strong_poisson(const CircleFunction& f, Complex zeta, const CircleGrid& grid) {
  require_interior(zeta, "strong_poisson");
  const std::optional<ModalForm> m = modal_form(f, grid);
  if (m) {
    return strong_poisson_checked(&*m, nullptr, zeta);
  }
  const SampledFunction s = sample(f, grid);
  return strong_poisson_checked(nullptr, &s, zeta);
}

MatrixValue strong_poisson(const PoissonExtension& ext, Complex zeta) {
  require_interior(zeta, "strong_poisson");
  if (ext.modal) {
    return strong_poisson_checked(ext.modal.get(), nullptr, zeta);
  }
  if (ext.samples) {
    return strong_poisson_checked(nullptr, ext.samples.get(), zeta);
  }
  const SampledFunction s = sample(ext.boundary, ext.quad_grid);
  return strong_poisson_checked(nullptr, &s, zeta);
}

SampledFunction radial_section(const DiskFunction& h, double r, const CircleGrid& grid) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("radial_section: radius must satisfy 0 <= r < 1, got " +
                            std::to_string(r));
  }
  SampledFunction out;
  out.grid = grid;
  out.values.reserve(static_cast<std::size_t>(grid.n_points));
  for (int j = 0; j < grid.n_points; ++j) {
    out.values.push_back(eval_disk(h, r * grid.nodes[static_cast<std::size_t>(j)]));
  }
  return out;
}

}  // namespace hardy
