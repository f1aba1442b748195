#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "checks.hpp"

#include <hardy/boundary.hpp>
#include <hardy/gallery.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

using hardy::Complex;
using hardy::Exponent;
using hardy::MatrixValue;

namespace {

// Independent arc-multiplier rule, written directly from the angular cell
// description: at angle theta the cell index N is the largest n in 1..d with
// theta >= (2 - 1/n)*pi, and the value is diag(1, sqrt(2n)*[n <= N]).
MatrixValue arc_value_oracle(int d, double theta) {
  const double pi = std::numbers::pi;
  int cell = 0;
  for (int n = 1; n <= d; ++n) {
    if (theta >= (2.0 - 1.0 / n) * pi) cell = n;
  }
  MatrixValue v = MatrixValue::Zero(d + 1, d + 1);
  v(0, 0) = 1.0;
  for (int n = 1; n <= d; ++n) {
    if (n <= cell) v(n, n) = std::sqrt(2.0 * n);
  }
  return v;
}

double normalized_angle(Complex z) {
  double theta = std::arg(z);
  if (theta < 0) theta += 2.0 * std::numbers::pi;
  return theta;
}

}  // namespace

TEST_CASE("diagonal disk closed forms") {
  const Complex zeta(0.3, -0.5);
  const auto d1 = hardy::make_diagonal_disk(1);
  CHECK(std::abs(hardy::eval_disk(d1, zeta)(0, 0) - zeta) <= 1e-16);

  const auto d4 = hardy::make_diagonal_disk(4);
  const MatrixValue v = hardy::eval_disk(d4, zeta);
  for (int n = 1; n <= 4; ++n) {
    CHECK(std::abs(v(n - 1, n - 1) - hardy::ipow(zeta, n)) <= 1e-15);
  }
  CHECK_THROWS_AS(hardy::make_diagonal_disk(0), std::invalid_argument);
}

TEST_CASE("diagonal-disk boundary values sit far apart in operator norm") {
  const auto grid = hardy::make_grid(3);
  const auto ladder = hardy::make_ladder(12);
  const auto result = hardy::radial_boundary(hardy::make_diagonal_disk(2), grid, ladder, 1e-8);
  // ||(b(z1) - b(z2)) e_1|| = |z1 - z2| = sqrt(3) > sqrt(2) for adjacent
  // third roots of unity.
  const MatrixValue diff = result.boundary.values[0] - result.boundary.values[1];
  const double moved = std::abs(diff(0, 0));
  CHECK(moved == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));
  CHECK(moved > std::numbers::sqrt2);
}

TEST_CASE("rotation symbol values, coefficients, and norms") {
  const auto grid = hardy::make_grid(16);
  const auto rot = hardy::make_rotation_symbol(4);
  CHECK(rot.rows() == 4);

  for (int n = 0; n < 4; ++n) {
    MatrixValue expected = MatrixValue::Zero(4, 4);
    expected(n, n) = 1.0;
    CHECK(hardy::max_abs_diff(hardy::fourier_coefficient(rot, n, grid), expected) <= 1e-13);
  }
  for (Exponent p : {Exponent(1.0), Exponent(2.0), Exponent::inf()}) {
    CHECK(hardy::lp_sot_norm(rot, p, grid) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("distinct rotation values are more than sqrt(2) apart") {
  // For every pair of distinct nodes some mode n0 puts the squared column
  // distance above 2; with d = n_points the largest gap reaches exactly 2.
  const int n = 8;
  const auto grid = hardy::make_grid(n);
  const auto rot = hardy::make_rotation_symbol(n);
  const auto s = hardy::sample(rot, grid);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      double best_sq = 0.0;
      for (int mode = 0; mode < n; ++mode) {
        best_sq = std::max(best_sq, std::norm(s.values[j](mode, mode) - s.values[k](mode, mode)));
      }
      CHECK(best_sq > 2.0 - 1e-12);
      CHECK(hardy::op_norm(s.values[j] - s.values[k]) >= std::sqrt(best_sq) - 1e-12);
    }
  }
}

TEST_CASE("evaluation functional row norm and growth") {
  const int d = 4;
  const auto h = hardy::make_evaluation_functional(d);
  CHECK(h.rows() == 1);
  CHECK(h.cols() == d);

  const Complex zeta(0.5, 0.3);
  double sq = 0.0;
  for (int n = 0; n < d; ++n) sq += std::pow(std::abs(zeta), 2 * n);
  CHECK(hardy::op_norm(hardy::eval_disk(h, zeta)) == doctest::Approx(std::sqrt(sq)).epsilon(1e-13));

  const auto grid = hardy::make_grid(16);
  const auto ladder = hardy::make_ladder(12);
  const auto prof = hardy::hp_disk_norm(h, Exponent(2.0), ladder, grid);
  CHECK(std::abs(prof.final_value - checks::eval_row_norm(d, ladder.radii.back())) <= 1e-10);
  // Approaches sqrt(d) as r -> 1 while the strong norm stays at 1.
  CHECK(prof.final_value > 0.99 * std::sqrt(double(d)));
  CHECK(std::abs(hardy::l2_strong_disk_norm(h, ladder, grid) - 1.0) <= 1e-8);
}

TEST_CASE("arc multiplier matches an independently coded rule") {
  const int d = 3;
  const auto arc = hardy::make_arc_multiplier(d);
  const auto grid = hardy::make_grid(64);
  const auto s = hardy::sample(arc, grid);
  for (int j = 0; j < grid.n_points; ++j) {
    const MatrixValue expected = arc_value_oracle(d, normalized_angle(grid.nodes[j]));
    CHECK(hardy::max_abs_diff(s.values[j], expected) <= 1e-14);
  }

  // Interior points of each cell carry operator norm sqrt(2N).
  CHECK(hardy::op_norm(hardy::eval_circle(arc, std::polar(1.0, 1.0))) ==
        doctest::Approx(1.0).epsilon(1e-14));                       // upper half circle
  CHECK(hardy::op_norm(hardy::eval_circle(arc, std::polar(1.0, 4.0))) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));       // first nested cell
  CHECK(hardy::op_norm(hardy::eval_circle(arc, std::polar(1.0, 5.0))) ==
        doctest::Approx(2.0).epsilon(1e-14));                       // second nested cell
  CHECK(hardy::op_norm(hardy::eval_circle(arc, std::polar(1.0, 5.5))) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));            // last nested cell
}

TEST_CASE("arc multiplier edge conventions and partition bookkeeping") {
  const auto arc = hardy::make_arc_multiplier(2);
  // z = 1 belongs to the upper-half-circle cell by convention.
  CHECK(hardy::op_norm(hardy::eval_circle(arc, Complex(1.0, 0.0))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // theta = pi is the left endpoint of the first nested cell.
  CHECK(hardy::op_norm(hardy::eval_circle(arc, Complex(-1.0, 0.0))) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));

  REQUIRE(arc.is_rule());
  const auto& arcs = arc.as_rule().arcs;
  REQUIRE(arcs != nullptr);
  double total = 0.0;
  for (std::size_t i = 0; i < arcs->cells.size(); ++i) total += arcs->measure(i);
  CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("unbounded row has norm sqrt(d) pointwise and no negative modes") {
  const int d = 6;
  const auto row = hardy::make_unbounded_row(d);
  CHECK(row.rows() == 1);
  CHECK(row.cols() == d);
  const auto grid = hardy::make_grid(32);
  for (double v : hardy::pointwise_norm(row, grid).values) {
    CHECK(v == doctest::Approx(std::sqrt(double(d))).epsilon(1e-13));
  }
  CHECK(hardy::analytic_defect(row, 8, grid).max_negative_defect <= 1e-13);
}

TEST_CASE("banach_transpose acts on coefficients without conjugation") {
  const auto grid = hardy::make_grid(16);
  MatrixValue a(2, 2);
  a << Complex(1, 2), Complex(3, -1), Complex(0, 4), Complex(-2, 0);
  const auto f = hardy::make_matrix_polynomial({{1, a}});
  const auto ft = hardy::banach_transpose(f);

  CHECK(hardy::max_abs_diff(hardy::fourier_coefficient(ft, 1, grid), a.transpose().eval()) <=
        1e-14);
  CHECK(hardy::max_abs(hardy::fourier_coefficient(ft, -1, grid)) <= 1e-14);
  CHECK(hardy::max_abs(hardy::fourier_coefficient(ft, 0, grid)) <= 1e-14);
  // Still analytic: transposition does not move modes.
  CHECK(hardy::analytic_defect(ft, 5, grid).max_negative_defect <= 1e-13);
}

TEST_CASE("banach_transpose is an involution on every representation") {
  const auto grid = hardy::make_grid(16);
  const std::vector<hardy::CircleFunction> members = {
      checks::two_sided_poly(),
      hardy::make_rotation_symbol(3),
      hardy::make_arc_multiplier(2),
      hardy::make_unbounded_row(4),
      hardy::CircleFunction{hardy::sample(checks::two_sided_poly(), grid)},
  };
  for (const auto& f : members) {
    const auto back = hardy::banach_transpose(hardy::banach_transpose(f));
    CHECK(back.rows() == f.rows());
    CHECK(back.cols() == f.cols());
    for (int j = 0; j < grid.n_points; ++j) {
      CHECK(hardy::max_abs_diff(hardy::eval_circle(back, grid.nodes[j]),
                                hardy::eval_circle(f, grid.nodes[j])) <= 1e-14);
    }
  }
}

TEST_CASE("transpose fixes the rotation symbol and swaps row shapes") {
  const auto grid = hardy::make_grid(8);
  const auto rot = hardy::make_rotation_symbol(3);
  const auto rott = hardy::banach_transpose(rot);
  for (int j = 0; j < grid.n_points; ++j) {
    CHECK(hardy::max_abs_diff(hardy::eval_circle(rott, grid.nodes[j]),
                              hardy::eval_circle(rot, grid.nodes[j])) <= 1e-14);
  }

  const auto row = hardy::make_unbounded_row(5);
  const auto col = hardy::banach_transpose(row);
  CHECK(col.rows() == 5);
  CHECK(col.cols() == 1);

  // Transposing an arc rule keeps the exact partition available.
  const auto arct = hardy::banach_transpose(hardy::make_arc_multiplier(2));
  REQUIRE(arct.is_rule());
  CHECK(arct.as_rule().arcs != nullptr);
}

TEST_CASE("transpose commutes with coefficients and the strong Poisson integral") {
  const auto grid = hardy::make_grid(32);
  const std::vector<hardy::CircleFunction> members = {
      checks::two_sided_poly(),
      hardy::make_rotation_symbol(4),
      hardy::make_unbounded_row(3),
  };
  for (const auto& f : members) {
    const auto ft = hardy::banach_transpose(f);
    for (int n = -4; n <= 4; ++n) {
      const MatrixValue lhs = hardy::fourier_coefficient(ft, n, grid);
      const MatrixValue rhs = hardy::fourier_coefficient(f, n, grid).transpose();
      CHECK(hardy::max_abs_diff(lhs, rhs) <= 1e-13);
    }
    for (Complex zeta : {Complex(0.0, 0.0), Complex(0.6, -0.3), Complex(-0.2, 0.7)}) {
      const MatrixValue lhs = hardy::strong_poisson(ft, zeta, grid);
      const MatrixValue rhs = hardy::strong_poisson(f, zeta, grid).transpose();
      CHECK(hardy::max_abs_diff(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("separability witness counts well-separated values") {
  const auto g8 = hardy::make_grid(8);

  MatrixValue a(2, 2);
  a << Complex(5, 0), Complex(0, 1), Complex(0, 0), Complex(2, -2);
  const auto constant = hardy::make_matrix_polynomial({{0, a}});
  for (double eps : {0.1, 1.0, 10.0}) {
    CHECK(hardy::separability_witness(hardy::sample(constant, g8), eps) == 1);
  }

  // Rotation values at distinct nodes are more than sqrt(2) apart, so at
  // eps = 1.4 the net must keep every node.
  for (int n : {8, 16}) {
    const auto grid = hardy::make_grid(n);
    const auto s = hardy::sample(hardy::make_rotation_symbol(n), grid);
    CHECK(hardy::separability_witness(s, 1.4) == n);
  }

  CHECK_THROWS_AS(hardy::separability_witness(hardy::sample(constant, g8), 0.0),
                  std::invalid_argument);
}

TEST_CASE("witness stabilizes for fixed-degree polynomials and shrinks with epsilon") {
  const auto f = hardy::make_random_matrix_polynomial(2, 5, 42);
  // The value set of a fixed-degree polynomial is a Lipschitz curve: once
  // the sampling resolves it, the net size stops moving.
  const auto net_at = [&](int n) {
    return hardy::separability_witness(hardy::sample(f, hardy::make_grid(n)), 1.5);
  };
  const int saturated = net_at(128);
  CHECK(net_at(256) == saturated);
  CHECK(net_at(512) == saturated);

  const auto s = hardy::sample(f, hardy::make_grid(128));
  int prev = std::numeric_limits<int>::max();
  for (double eps : {0.05, 0.1, 0.2, 0.5, 1.0, 4.0}) {
    const int net = hardy::separability_witness(s, eps);
    CHECK(net <= prev);
    prev = net;
  }
  CHECK(hardy::separability_witness(s, 100.0) == 1);
}

TEST_CASE("gallery kinds parse and build") {
  using hardy::GalleryKind;
  for (GalleryKind kind :
       {GalleryKind::diagonal_disk, GalleryKind::rotation_symbol,
        GalleryKind::evaluation_functional, GalleryKind::arc_multiplier,
        GalleryKind::unbounded_row, GalleryKind::matrix_polynomial}) {
    CHECK(hardy::parse_kind(hardy::kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(hardy::parse_kind("mystery"), hardy::spec_error);

  hardy::GallerySpec rot{GalleryKind::rotation_symbol, 3, {}, std::nullopt, 0};
  const auto built = hardy::build_gallery(rot);
  REQUIRE(std::holds_alternative<hardy::CircleFunction>(built));
  CHECK(std::get<hardy::CircleFunction>(built).rows() == 3);

  hardy::GallerySpec disk{GalleryKind::diagonal_disk, 2, {}, std::nullopt, 0};
  CHECK(std::holds_alternative<hardy::DiskFunction>(hardy::build_gallery(disk)));

  hardy::GallerySpec bare{GalleryKind::matrix_polynomial, 2, {}, std::nullopt, 0};
  CHECK_THROWS_AS(hardy::build_gallery(bare), hardy::spec_error);

  hardy::GallerySpec seeded{GalleryKind::matrix_polynomial, 2, {}, 99, 4};
  const auto random_built = hardy::build_gallery(seeded);
  REQUIRE(std::holds_alternative<hardy::CircleFunction>(random_built));
  const auto& fp = std::get<hardy::CircleFunction>(random_built);
  REQUIRE(fp.is_fourier());
  CHECK(fp.as_fourier().degree() == 4);

  // Same seed, same member.
  const auto again = std::get<hardy::CircleFunction>(hardy::build_gallery(seeded));
  const auto grid = hardy::make_grid(8);
  for (int j = 0; j < 8; ++j) {
    CHECK(hardy::max_abs_diff(hardy::eval_circle(fp, grid.nodes[j]),
                              hardy::eval_circle(again, grid.nodes[j])) == 0.0);
  }
}

TEST_CASE("random polynomial coefficients decay with the mode") {
  const auto f = hardy::make_random_matrix_polynomial(4, 6, 1);
  const auto& coeffs = f.as_fourier().coeffs;
  REQUIRE(coeffs.size() == 6);
  CHECK(coeffs.begin()->first == 1);
  CHECK(coeffs.rbegin()->first == 6);
  // The 1/n^2 scaling keeps high modes well below the fundamental.
  const double lead = hardy::op_norm(coeffs.at(1));
  CHECK(hardy::op_norm(coeffs.at(6)) <= lead);
}
