#include "hardy/norms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hardy {

namespace {

// One piece of the integration domain: a weight (normalized measure) and the
// constant matrix value the integrand takes there.
struct QuadratureCell {
  double weight = 0.0;
  MatrixValue value;
};

std::vector<QuadratureCell> integration_cells(const CircleFunction& f,
                                              const CircleGrid& grid) {
  std::vector<QuadratureCell> cells;
  if (f.is_rule() && f.as_rule().arcs) {
    const ArcPartition& arcs = *f.as_rule().arcs;
    cells.reserve(arcs.cells.size());
    for (std::size_t i = 0; i < arcs.cells.size(); ++i) {
      cells.push_back({arcs.measure(i), arcs.cells[i].value});
    }
    return cells;
  }
  const SampledFunction s = sample(f, grid);
  cells.reserve(s.values.size());
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    cells.push_back({s.grid.weights[j], s.values[j]});
  }
  return cells;
}

double lp_of_cells(const std::vector<double>& weights, const std::vector<double>& mags,
                   Exponent p) {
  if (p.is_inf()) {
    double best = 0.0;
    for (double m : mags) best = std::max(best, m);
    return best;
  }
  const double pv = p.value();
  double acc = 0.0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    acc += weights[i] * std::pow(mags[i], pv);
  }
  return std::pow(acc, 1.0 / pv);
}

double gram_top_eigenvalue(const MatrixValue& gram) {
  // Symmetrize to scrub the rounding skew before the Hermitian solver.
  const MatrixValue h = 0.5 * (gram + gram.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<MatrixValue> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw convergence_error("gram eigenvalue solve failed");
  }
  return std::max(0.0, solver.eigenvalues().maxCoeff());
}

}  // namespace

Exponent::Exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("Exponent: p must be finite and >= 1, got " +
                                std::to_string(p));
  }
  p_ = p;
}

Exponent Exponent::inf() {
  Exponent e;
  e.inf_ = true;
  e.p_ = std::numeric_limits<double>::infinity();
  return e;
}

Exponent Exponent::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity") return inf();
  try {
    std::size_t used = 0;
    const double p = std::stod(lower, &used);
    if (used != lower.size()) throw std::invalid_argument("trailing characters");
    return Exponent(p);
  } catch (const std::exception&) {
    throw std::invalid_argument("Exponent: cannot parse '" + std::string(text) +
                                "' (expected a number >= 1 or 'inf')");
  }
}

double Exponent::value() const {
  if (inf_) throw std::logic_error("Exponent: value() called on inf");
  return p_;
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  // Integer exponents are by far the common case; print them plainly.
  if (p_ == std::floor(p_) && p_ < 1e15) {
    return std::to_string(static_cast<long long>(p_));
  }
  return std::to_string(p_);
}

double op_norm(const MatrixValue& a) {
  require_finite(a, "op_norm");
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 || a.cols() == 1) {
    return a.norm();  // rank-one map: operator norm is the vector 2-norm
  }
  if (std::min(a.rows(), a.cols()) <= 16) {
    Eigen::JacobiSVD<MatrixValue> svd(a);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<MatrixValue> svd(a);
  return svd.singularValues()(0);
}

ScalarSampled pointwise_norm(const CircleFunction& f, const CircleGrid& grid) {
  const SampledFunction s = sample(f, grid);
  ScalarSampled out;
  out.grid = grid;
  out.values.reserve(s.values.size());
  for (const MatrixValue& v : s.values) {
    out.values.push_back(op_norm(v));
  }
  return out;
}

double lp_scalar_norm(const ScalarSampled& s, Exponent p) {
  if (s.values.size() != static_cast<std::size_t>(s.grid.n_points)) {
    throw std::invalid_argument("lp_scalar_norm: sample count does not match grid");
  }
  std::vector<double> mags;
  mags.reserve(s.values.size());
  for (double v : s.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("lp_scalar_norm: non-finite sample");
    }
    mags.push_back(std::abs(v));
  }
  return lp_of_cells(s.grid.weights, mags, p);
}

double lp_sot_norm(const CircleFunction& f, Exponent p, const CircleGrid& grid) {
  const std::vector<QuadratureCell> cells = integration_cells(f, grid);
  std::vector<double> weights, mags;
  weights.reserve(cells.size());
  mags.reserve(cells.size());
  for (const QuadratureCell& cell : cells) {
    weights.push_back(cell.weight);
    mags.push_back(op_norm(cell.value));
  }
  return lp_of_cells(weights, mags, p);
}

NormProfile hp_disk_norm(const DiskFunction& h, Exponent p, const RadiusLadder& ladder,
                         const CircleGrid& grid) {
  NormProfile profile;
  profile.p = p;
  profile.per_radius.reserve(ladder.radii.size());
  for (double r : ladder.radii) {
    const SampledFunction section = radial_section(h, r, grid);
    ScalarSampled mags;
    mags.grid = grid;
    mags.values.reserve(section.values.size());
    for (const MatrixValue& v : section.values) {
      mags.values.push_back(op_norm(v));
    }
    profile.per_radius.emplace_back(r, lp_scalar_norm(mags, p));
  }
  profile.final_value = profile.per_radius.back().second;
  return profile;
}

double l2_strong_norm(const CircleFunction& f, const CircleGrid& grid) {
  const std::vector<QuadratureCell> cells = integration_cells(f, grid);
  MatrixValue gram = MatrixValue::Zero(f.cols(), f.cols());
  for (const QuadratureCell& cell : cells) {
    gram += cell.weight * (cell.value.adjoint() * cell.value);
  }
  return std::sqrt(gram_top_eigenvalue(gram));
}

double l2_strong_disk_norm(const DiskFunction& h, const RadiusLadder& ladder,
                           const CircleGrid& grid) {
  double best = 0.0;
  for (double r : ladder.radii) {
    const SampledFunction section = radial_section(h, r, grid);
    MatrixValue gram = MatrixValue::Zero(h.cols(), h.cols());
    for (std::size_t j = 0; j < section.values.size(); ++j) {
      gram += section.grid.weights[j] * (section.values[j].adjoint() * section.values[j]);
    }
    best = std::max(best, std::sqrt(gram_top_eigenvalue(gram)));
  }
  return best;
}

double lp_strong_norm_estimate(const CircleFunction& f, Exponent p, int n_probe,
                               std::uint64_t seed, const CircleGrid& grid) {
  if (n_probe < 1) {
    throw std::invalid_argument("lp_strong_norm_estimate: n_probe must be >= 1");
  }
  const std::vector<QuadratureCell> cells = integration_cells(f, grid);
  const Eigen::Index dim = f.cols();

  std::vector<Eigen::VectorXcd> probes;
  probes.reserve(static_cast<std::size_t>(n_probe));
  for (Eigen::Index c = 0; c < dim && std::cmp_less(probes.size(), n_probe); ++c) {
    probes.push_back(Eigen::VectorXcd::Unit(dim, c));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (std::cmp_less(probes.size(), n_probe)) {
    Eigen::VectorXcd x(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      x(i) = Complex(gauss(rng), gauss(rng));
    }
    const double len = x.norm();
    if (len < 1e-12) continue;
    probes.push_back(x / len);
  }

  std::vector<double> weights;
  weights.reserve(cells.size());
  for (const QuadratureCell& cell : cells) weights.push_back(cell.weight);

  double best = 0.0;
  std::vector<double> mags(cells.size());
  for (const Eigen::VectorXcd& x : probes) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      mags[i] = (cells[i].value * x).norm();
    }
    best = std::max(best, lp_of_cells(weights, mags, p));
  }
  return best;
}

}  // namespace hardy
