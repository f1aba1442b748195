#include "hardy/circle_function.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace hardy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit_modulus(Complex z, const char* where) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) {
    throw std::domain_error(std::string(where) +
                            ": point must lie on the unit circle, |z| = " +
                            std::to_string(std::abs(z)));
  }
}

double normalize_angle(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0) theta += kTwoPi;
  return theta;
}

}  // namespace

int FourierPolynomial::degree() const {
  int deg = 0;
  for (const auto& [n, a] : coeffs) {
    deg = std::max(deg, std::abs(n));
  }
  return deg;
}

const ArcCell& ArcPartition::locate(double theta) const {
  theta = normalize_angle(theta);
  // Snap to a cell edge when within rounding distance so that angles
  // mathematically on an edge follow the half-open convention instead of
  // atan2 rounding.
  for (const ArcCell& cell : cells) {
    if (std::abs(theta - cell.theta_lo) <= 1e-12) {
      theta = cell.theta_lo;
      break;
    }
  }
  for (const ArcCell& cell : cells) {
    if (theta >= cell.theta_lo && theta < cell.theta_hi) return cell;
  }
  // Guard against theta == 2*pi from rounding in fmod.
  return cells.back();
}

double ArcPartition::measure(std::size_t i) const {
  const ArcCell& cell = cells.at(i);
  return (cell.theta_hi - cell.theta_lo) / kTwoPi;
}

CircleFunction::CircleFunction(SampledFunction s) : storage_(std::move(s)) { validate(); }
CircleFunction::CircleFunction(FourierPolynomial f) : storage_(std::move(f)) { validate(); }
CircleFunction::CircleFunction(RuleFunction r) : storage_(std::move(r)) { validate(); }

void CircleFunction::validate() {
  if (const auto* s = std::get_if<SampledFunction>(&storage_)) {
    if (s->grid.n_points <= 0) {
      throw std::invalid_argument("CircleFunction: sampled function needs a nonempty grid");
    }
    if (s->values.size() != static_cast<std::size_t>(s->grid.n_points)) {
      throw std::invalid_argument(
          "CircleFunction: sample count " + std::to_string(s->values.size()) +
          " does not match grid size " + std::to_string(s->grid.n_points));
    }
    rows_ = s->values.front().rows();
    cols_ = s->values.front().cols();
    for (std::size_t j = 0; j < s->values.size(); ++j) {
      const MatrixValue& v = s->values[j];
      if (v.rows() != rows_ || v.cols() != cols_) {
        throw std::invalid_argument("CircleFunction: sample " + std::to_string(j) +
                                    " has a different shape than sample 0");
      }
      require_finite(v, "CircleFunction sample " + std::to_string(j));
    }
  } else if (const auto* f = std::get_if<FourierPolynomial>(&storage_)) {
    if (f->coeffs.empty()) {
      throw std::invalid_argument(
          "CircleFunction: Fourier polynomial needs at least one coefficient");
    }
    rows_ = f->coeffs.begin()->second.rows();
    cols_ = f->coeffs.begin()->second.cols();
    for (const auto& [n, a] : f->coeffs) {
      if (a.rows() != rows_ || a.cols() != cols_) {
        throw std::invalid_argument("CircleFunction: coefficient at mode " +
                                    std::to_string(n) + " has a mismatched shape");
      }
      require_finite(a, "CircleFunction coefficient " + std::to_string(n));
    }
  } else {
    const auto& r = std::get<RuleFunction>(storage_);
    if (!r.rule) {
      throw std::invalid_argument("CircleFunction: rule function has no callable");
    }
    if (r.rows <= 0 || r.cols <= 0) {
      throw std::invalid_argument("CircleFunction: rule function needs positive shape");
    }
    if (r.arcs) {
      if (r.arcs->cells.empty()) {
        throw std::invalid_argument("CircleFunction: arc partition has no cells");
      }
      double cursor = 0.0;
      for (const ArcCell& cell : r.arcs->cells) {
        if (std::abs(cell.theta_lo - cursor) > 1e-12 || cell.theta_hi <= cell.theta_lo) {
          throw std::invalid_argument(
              "CircleFunction: arc cells must tile [0, 2*pi) in order");
        }
        if (cell.value.rows() != r.rows || cell.value.cols() != r.cols) {
          throw std::invalid_argument("CircleFunction: arc cell value shape mismatch");
        }
        cursor = cell.theta_hi;
      }
      if (std::abs(cursor - kTwoPi) > 1e-12) {
        throw std::invalid_argument("CircleFunction: arc cells do not cover [0, 2*pi)");
      }
    }
    rows_ = r.rows;
    cols_ = r.cols;
  }
}

MatrixValue eval_circle(const CircleFunction& f, Complex z) {
  require_unit_modulus(z, "eval_circle");
  if (f.is_sampled()) {
    const SampledFunction& s = f.as_sampled();
    const int j = node_index(s.grid, z);
    if (j < 0) {
      throw not_representable_error(
          "eval_circle: sampled function has no value at the requested point; "
          "only its own grid nodes are available");
    }
    return s.values[static_cast<std::size_t>(j)];
  }
  if (f.is_fourier()) {
    const FourierPolynomial& p = f.as_fourier();
    MatrixValue acc = MatrixValue::Zero(f.rows(), f.cols());
    for (const auto& [n, a] : p.coeffs) {
      acc += a * unit_pow(z, n);
    }
    return acc;
  }
  const RuleFunction& r = f.as_rule();
  MatrixValue v = r.rule(z);
  if (v.rows() != r.rows || v.cols() != r.cols) {
    throw std::logic_error("eval_circle: rule returned a value of the wrong shape");
  }
  return v;
}

SampledFunction sample(const CircleFunction& f, const CircleGrid& grid) {
  if (f.is_sampled()) {
    const SampledFunction& s = f.as_sampled();
    if (s.grid.n_points != grid.n_points) {
      throw std::invalid_argument(
          "sample: sampled function lives on a grid of " +
          std::to_string(s.grid.n_points) + " points, cannot resample to " +
          std::to_string(grid.n_points));
    }
    return s;
  }
  SampledFunction out;
  out.grid = grid;
  out.values.reserve(static_cast<std::size_t>(grid.n_points));
  if (f.is_fourier()) {
    // Use the node table for exact powers: z_j^n = nodes[(j*n) mod N].
    const FourierPolynomial& p = f.as_fourier();
    for (int j = 0; j < grid.n_points; ++j) {
      MatrixValue acc = MatrixValue::Zero(f.rows(), f.cols());
      for (const auto& [n, a] : p.coeffs) {
        acc += a * grid.node_power(j, n);
      }
      out.values.push_back(std::move(acc));
    }
    return out;
  }
  for (int j = 0; j < grid.n_points; ++j) {
    out.values.push_back(eval_circle(f, grid.nodes[static_cast<std::size_t>(j)]));
  }
  return out;
}

SampledFunction sample_difference(const CircleFunction& a, const CircleFunction& b,
                                  const CircleGrid& grid) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("sample_difference: shape mismatch");
  }
  SampledFunction sa = sample(a, grid);
  const SampledFunction sb = sample(b, grid);
  for (std::size_t j = 0; j < sa.values.size(); ++j) {
    sa.values[j] -= sb.values[j];
  }
  return sa;
}

}  // namespace hardy
