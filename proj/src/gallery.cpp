#include "hardy/gallery.hpp"

#include "hardy/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int d, const char* who) {
  if (d < 1) {
    throw std::invalid_argument(std::string(who) + ": dim must be >= 1, got " +
                                std::to_string(d));
  }
}

MatrixValue arc_value(int d, int N) {
  // Diagonal (1, sqrt(2)*1[1<=N], ..., sqrt(2d)*1[d<=N]), size (d+1)x(d+1).
  MatrixValue v = MatrixValue::Zero(d + 1, d + 1);
  v(0, 0) = 1.0;
  for (int k = 1; k <= std::min(N, d); ++k) {
    v(k, k) = std::sqrt(2.0 * k);
  }
  return v;
}

}  // namespace

std::string kind_name(GalleryKind kind) {
  switch (kind) {
    case GalleryKind::diagonal_disk: return "diagonal_disk";
    case GalleryKind::rotation_symbol: return "rotation_symbol";
    case GalleryKind::evaluation_functional: return "evaluation_functional";
    case GalleryKind::arc_multiplier: return "arc_multiplier";
    case GalleryKind::unbounded_row: return "unbounded_row";
    case GalleryKind::matrix_polynomial: return "matrix_polynomial";
  }
  throw std::logic_error("kind_name: unreachable");
}

GalleryKind parse_kind(std::string_view name) {
  if (name == "diagonal_disk") return GalleryKind::diagonal_disk;
  if (name == "rotation_symbol") return GalleryKind::rotation_symbol;
  if (name == "evaluation_functional") return GalleryKind::evaluation_functional;
  if (name == "arc_multiplier") return GalleryKind::arc_multiplier;
  if (name == "unbounded_row") return GalleryKind::unbounded_row;
  if (name == "matrix_polynomial") return GalleryKind::matrix_polynomial;
  throw spec_error("unknown gallery member '" + std::string(name) + "'");
}

DiskFunction make_diagonal_disk(int d) {
  require_dim(d, "make_diagonal_disk");
  TaylorPolynomial t;
  t.coeffs.assign(static_cast<std::size_t>(d) + 1, MatrixValue::Zero(d, d));
  for (int m = 1; m <= d; ++m) {
    t.coeffs[static_cast<std::size_t>(m)](m - 1, m - 1) = 1.0;
  }
  return DiskFunction(std::move(t));
}

CircleFunction make_rotation_symbol(int d) {
  require_dim(d, "make_rotation_symbol");
  RuleFunction r;
  r.name = "rotation_symbol_" + std::to_string(d);
  r.rows = d;
  r.cols = d;
  r.bandlimit = d - 1;
  r.rule = [d](Complex z) {
    MatrixValue v = MatrixValue::Zero(d, d);
    Complex power(1.0, 0.0);
    for (int n = 0; n < d; ++n) {
      v(n, n) = power;
      power *= z;
    }
    return v;
  };
  return CircleFunction(std::move(r));
}

DiskFunction make_evaluation_functional(int d) {
  require_dim(d, "make_evaluation_functional");
  TaylorPolynomial t;
  t.coeffs.assign(static_cast<std::size_t>(d), MatrixValue::Zero(1, d));
  for (int m = 0; m < d; ++m) {
    t.coeffs[static_cast<std::size_t>(m)](0, m) = 1.0;
  }
  return DiskFunction(std::move(t));
}

CircleFunction make_arc_multiplier(int d) {
  require_dim(d, "make_arc_multiplier");
  auto arcs = std::make_shared<ArcPartition>();
  arcs->cells.push_back({0.0, kPi, arc_value(d, 0)});
  for (int N = 1; N < d; ++N) {
    arcs->cells.push_back(
        {(2.0 - 1.0 / N) * kPi, (2.0 - 1.0 / (N + 1)) * kPi, arc_value(d, N)});
  }
  arcs->cells.push_back({(2.0 - 1.0 / d) * kPi, 2.0 * kPi, arc_value(d, d)});

  RuleFunction r;
  r.name = "arc_multiplier_" + std::to_string(d);
  r.rows = d + 1;
  r.cols = d + 1;
  r.arcs = arcs;
  r.rule = [arcs](Complex z) { return arcs->locate(std::arg(z)).value; };
  return CircleFunction(std::move(r));
}

CircleFunction make_unbounded_row(int d) {
  require_dim(d, "make_unbounded_row");
  RuleFunction r;
  r.name = "unbounded_row_" + std::to_string(d);
  r.rows = 1;
  r.cols = d;
  r.bandlimit = d;
  r.rule = [d](Complex z) {
    MatrixValue v(1, d);
    Complex power(1.0, 0.0);
    for (int n = 1; n <= d; ++n) {
      power *= z;
      v(0, n - 1) = power;
    }
    return v;
  };
  return CircleFunction(std::move(r));
}

CircleFunction make_matrix_polynomial(const std::map<int, MatrixValue>& coeffs) {
  FourierPolynomial p;
  p.coeffs = coeffs;
  return CircleFunction(std::move(p));
}

CircleFunction make_random_matrix_polynomial(int dim, int degree, std::uint64_t seed) {
  require_dim(dim, "make_random_matrix_polynomial");
  if (degree < 1) {
    throw std::invalid_argument("make_random_matrix_polynomial: degree must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FourierPolynomial p;
  for (int n = 1; n <= degree; ++n) {
    const double scale = 1.0 / (static_cast<double>(n) * n * std::sqrt(dim));
    MatrixValue a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        a(i, j) = scale * Complex(gauss(rng), gauss(rng));
      }
    }
    p.coeffs.emplace(n, std::move(a));
  }
  return CircleFunction(std::move(p));
}

CircleFunction banach_transpose(const CircleFunction& f) {
  if (f.is_sampled()) {
    SampledFunction s = f.as_sampled();
    for (MatrixValue& v : s.values) v = v.transpose().eval();
    return CircleFunction(std::move(s));
  }
  if (f.is_fourier()) {
    FourierPolynomial p = f.as_fourier();
    for (auto& [n, a] : p.coeffs) a = a.transpose().eval();
    return CircleFunction(std::move(p));
  }
  const RuleFunction& orig = f.as_rule();
  RuleFunction r;
  r.name = orig.name + "_transpose";
  r.rows = orig.cols;
  r.cols = orig.rows;
  r.bandlimit = orig.bandlimit;
  if (orig.arcs) {
    auto arcs = std::make_shared<ArcPartition>(*orig.arcs);
    for (ArcCell& cell : arcs->cells) cell.value = cell.value.transpose().eval();
    r.arcs = std::move(arcs);
  }
  r.rule = [inner = orig.rule](Complex z) -> MatrixValue {
    return inner(z).transpose();
  };
  return CircleFunction(std::move(r));
}

int separability_witness(const SampledFunction& f, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("separability_witness: epsilon must be positive");
  }
  std::vector<std::size_t> net;
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    bool separated = true;
    for (std::size_t c : net) {
      if (op_norm(f.values[j] - f.values[c]) <= epsilon) {
        separated = false;
        break;
      }
    }
    if (separated) net.push_back(j);
  }
  return static_cast<int>(net.size());
}

std::variant<CircleFunction, DiskFunction> build_gallery(const GallerySpec& spec) {
  require_dim(spec.dim, "build_gallery");
  switch (spec.kind) {
    case GalleryKind::diagonal_disk:
      return make_diagonal_disk(spec.dim);
    case GalleryKind::rotation_symbol:
      return make_rotation_symbol(spec.dim);
    case GalleryKind::evaluation_functional:
      return make_evaluation_functional(spec.dim);
    case GalleryKind::arc_multiplier:
      return make_arc_multiplier(spec.dim);
    case GalleryKind::unbounded_row:
      return make_unbounded_row(spec.dim);
    case GalleryKind::matrix_polynomial:
      if (!spec.coeffs.empty()) {
        return make_matrix_polynomial(spec.coeffs);
      }
      if (spec.seed) {
        return make_random_matrix_polynomial(spec.dim, spec.degree > 0 ? spec.degree : 5,
                                             *spec.seed);
      }
      throw spec_error(
          "matrix_polynomial needs either an explicit coefficient map or a seed");
  }
  throw std::logic_error("build_gallery: unreachable");
}

}  // namespace hardy
