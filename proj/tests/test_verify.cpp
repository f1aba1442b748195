#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "checks.hpp"

#include <hardy/verify.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using hardy::Complex;
using hardy::Exponent;
using hardy::MatrixValue;
using hardy::Resolution;

namespace {

// diag(z^1, ..., z^d) as an explicit coefficient table: the boundary symbol
// of the diagonal disk function.
hardy::CircleFunction diagonal_boundary(int d) {
  std::map<int, MatrixValue> coeffs;
  for (int n = 1; n <= d; ++n) {
    MatrixValue e = MatrixValue::Zero(d, d);
    e(n - 1, n - 1) = 1.0;
    coeffs.emplace(n, e);
  }
  return hardy::make_matrix_polynomial(coeffs);
}

}  // namespace

TEST_CASE("isometry holds for the rotation symbol") {
  const std::vector<Resolution> res = {{128, 8}, {256, 9}, {512, 10}};
  const auto report =
      hardy::verify_isometry(hardy::make_rotation_symbol(4), Exponent(2.0), res, 1e-3);
  CHECK(report.claim == "isometry");
  CHECK(report.verdict);
  REQUIRE(report.rows.size() == 3);
  for (const auto& row : report.rows) {
    CHECK(row.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.lhs <= row.rhs + 1e-8);  // contraction, unconditionally
    CHECK(row.ok);
  }
  CHECK(report.rows.back().rel_dev <= 1e-3);
  CHECK(hardy::re_verdict(report));
}

TEST_CASE("isometry holds for the diagonal boundary at p = inf") {
  const std::vector<Resolution> res = {{64, 8}, {128, 9}, {256, 10}};
  const auto report =
      hardy::verify_isometry(diagonal_boundary(3), Exponent::inf(), res, 1e-3);
  CHECK(report.verdict);
  for (const auto& row : report.rows) {
    CHECK(std::abs(row.rhs - 1.0) <= 1e-3);
    CHECK(row.lhs <= row.rhs + 1e-8);
  }
  // The sup over r is reached from below at rate (1 - r_K).
  CHECK(std::abs(report.rows.back().lhs - 1.0) <= 1e-3);
}

TEST_CASE("isometry deviations shrink roughly geometrically for polynomials") {
  const std::vector<Resolution> res = {{64, 6}, {128, 7}, {256, 8}, {512, 9}};
  const auto f = hardy::make_random_matrix_polynomial(4, 5, 37);
  const auto report = hardy::verify_isometry(f, Exponent(1.0), res, 1e-2);
  CHECK(report.verdict);
  REQUIRE(report.rows.size() == 4);
  for (std::size_t k = res.size() - 2; k < res.size(); ++k) {
    // Halving (1 - r) should at least halve the deviation once in range.
    CHECK(report.rows[k].rel_dev <= 0.6 * report.rows[k - 1].rel_dev);
  }
}

TEST_CASE("isometry refuses non-analytic input and bad arguments") {
  const std::vector<Resolution> res = {{64, 6}, {128, 7}, {256, 8}};
  const auto anti = checks::scalar_poly({{-1, 1.0}});
  CHECK_THROWS_WITH_AS(hardy::verify_isometry(anti, Exponent(2.0), res, 1e-3),
                       doctest::Contains("defect"), std::invalid_argument);

  const std::vector<Resolution> empty;
  CHECK_THROWS_AS(hardy::verify_isometry(hardy::make_rotation_symbol(2), Exponent(2.0), empty),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hardy::verify_isometry(hardy::make_rotation_symbol(2), Exponent(2.0), res, 0.0),
      std::invalid_argument);
}

TEST_CASE("contraction report for an anti-analytic monomial") {
  const auto grid = hardy::make_grid(64);
  const auto ladder = hardy::make_ladder(8);
  const auto f = hardy::make_matrix_polynomial({{-1, checks::ident(2)}});
  const auto report = hardy::verify_contraction_nonanalytic(f, Exponent(2.0), ladder, grid);
  CHECK(report.claim == "contraction");
  CHECK(report.verdict);
  REQUIRE(report.rows.size() == 8);
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    // P[conj(z)] = conj(zeta), so the section norm is exactly the radius.
    CHECK(std::abs(report.rows[k].lhs - ladder.radii[k]) <= 1e-12);
    CHECK(std::abs(report.rows[k].rhs - 1.0) <= 1e-12);
    CHECK(report.rows[k].lhs <= report.rows[k].rhs + 1e-8);
  }
}

TEST_CASE("contraction is equality for constants") {
  const auto grid = hardy::make_grid(32);
  const auto ladder = hardy::make_ladder(6);
  MatrixValue a(2, 2);
  a << Complex(2, -1), Complex(0, 3), Complex(1, 1), Complex(0, -2);
  const auto f = hardy::make_matrix_polynomial({{0, a}});
  for (Exponent p : {Exponent(1.0), Exponent(2.0), Exponent::inf()}) {
    const auto report = hardy::verify_contraction_nonanalytic(f, p, ladder, grid);
    CHECK(report.verdict);
    for (const auto& row : report.rows) {
      CHECK(std::abs(row.lhs - row.rhs) <= 1e-12);
    }
  }
}

TEST_CASE("contraction margin grows toward the center for mixed content") {
  const auto grid = hardy::make_grid(64);
  const auto ladder = hardy::make_ladder(8);
  // Rotation symbol plus an anti-analytic perturbation in the corner entry.
  std::map<int, MatrixValue> coeffs;
  for (int n = 0; n < 3; ++n) {
    MatrixValue e = MatrixValue::Zero(3, 3);
    e(n, n) = 1.0;
    coeffs.emplace(n, e);
  }
  MatrixValue corner = MatrixValue::Zero(3, 3);
  corner(0, 0) = 1.0;
  coeffs.emplace(-1, corner);
  const auto f = hardy::make_matrix_polynomial(coeffs);

  const auto report = hardy::verify_contraction_nonanalytic(f, Exponent(2.0), ladder, grid);
  CHECK(report.verdict);
  std::vector<double> margins;
  for (const auto& row : report.rows) {
    CHECK(row.lhs < row.rhs);  // strictly inside
    margins.push_back(row.rhs - row.lhs);
  }
  CHECK(std::is_sorted(margins.rbegin(), margins.rend()));  // shrinks as r grows

  // Independent route: damp each stored mode by r^|n| and take the norm of
  // the resulting polynomial.
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    std::map<int, MatrixValue> damped;
    for (const auto& [n, c] : coeffs) {
      damped.emplace(n, std::pow(ladder.radii[k], std::abs(n)) * c);
    }
    const double oracle =
        hardy::lp_sot_norm(hardy::make_matrix_polynomial(damped), Exponent(2.0), grid);
    CHECK(std::abs(report.rows[k].lhs - oracle) <= 1e-12);
  }
}

TEST_CASE("transpose identity verifies on gallery members") {
  const auto grid = hardy::make_grid(64);
  const std::vector<Complex> probes = {Complex(0.0, 0.0), Complex(0.5, 0.0),
                                       Complex(0.3, 0.4), Complex(-0.6, 0.1),
                                       Complex(0.2, -0.7)};
  const std::vector<hardy::CircleFunction> members = {
      hardy::make_rotation_symbol(4),
      hardy::make_arc_multiplier(3),
      hardy::make_unbounded_row(5),
      hardy::make_random_matrix_polynomial(3, 4, 2025),
      checks::two_sided_poly(),
  };
  for (const auto& f : members) {
    const auto report = hardy::verify_adjoint_identity(f, probes, grid);
    CHECK(report.claim == "adjoint");
    CHECK(report.verdict);
    REQUIRE(report.rows.size() == probes.size());
    CHECK(report.rows[0].abs_dev <= 1e-15);  // at zeta = 0 both sides are f^(0)^T
    for (const auto& row : report.rows) CHECK(row.abs_dev <= 1e-12);
  }
}

TEST_CASE("transpose identity rejects out-of-range probes") {
  const auto grid = hardy::make_grid(16);
  const auto f = hardy::make_rotation_symbol(2);
  const std::vector<Complex> bad = {Complex(0.5, 0.0), Complex(1.0, 0.0)};
  CHECK_THROWS_AS(hardy::verify_adjoint_identity(f, bad, grid), std::invalid_argument);
  const std::vector<Complex> none;
  CHECK_THROWS_AS(hardy::verify_adjoint_identity(f, none, grid), std::invalid_argument);
}

TEST_CASE("boundary roundtrip reports") {
  const auto grid = hardy::make_grid(256);
  const auto ladder = hardy::make_ladder(12);

  const auto rot_report =
      hardy::verify_boundary_roundtrip(hardy::make_rotation_symbol(3), grid, ladder, 1e-6);
  CHECK(rot_report.claim == "roundtrip");
  CHECK(rot_report.verdict);
  REQUIRE(rot_report.rows.size() == 2);
  CHECK(rot_report.rows[0].label == "roundtrip-l2");
  CHECK(rot_report.rows[0].abs_dev <= 1e-6);
  CHECK(rot_report.rows[1].label == "extrapolation-residual");
  CHECK(rot_report.rows[1].abs_dev <= 1e-6);

  MatrixValue a(2, 2);
  a << Complex(1, 4), Complex(2, 0), Complex(0, -1), Complex(3, 3);
  const auto const_report = hardy::verify_boundary_roundtrip(
      hardy::make_matrix_polynomial({{0, a}}), grid, ladder, 1e-6);
  CHECK(const_report.verdict);
  CHECK(const_report.rows[0].abs_dev <= 1e-14);

  const auto diag_report =
      hardy::verify_boundary_roundtrip(diagonal_boundary(5), grid, ladder, 1e-6);
  CHECK(diag_report.verdict);
  CHECK(diag_report.rows[0].abs_dev <= 1e-6);
}

TEST_CASE("containment gaps widen along the dimension series") {
  const std::vector<int> dims = {1, 2, 4};
  const auto report = hardy::verify_containment_gaps(dims);
  CHECK(report.claim == "gaps");
  CHECK(report.verdict);
  CHECK(hardy::re_verdict(report));

  std::map<std::string, std::vector<hardy::ReportRow>> series;
  for (const auto& row : report.rows) series[row.label].push_back(row);

  REQUIRE(series.count("witness-rotation") == 1);
  for (const auto& row : series["witness-rotation"]) {
    CHECK(row.lhs == double(row.dim));  // every node is its own net point
  }

  REQUIRE(series.count("arc-sot-squared") == 1);
  const auto& sot = series["arc-sot-squared"];
  CHECK(std::abs(sot[0].lhs - 1.5) <= 1e-8);  // 1/2 + H_1
  for (const auto& row : sot) {
    CHECK(std::abs(row.rhs - (0.5 + checks::harmonic_sum(row.dim))) <= 1e-12);
    CHECK(std::abs(row.lhs - row.rhs) <= 1e-8);
  }
  REQUIRE(series.count("arc-strong") == 1);
  for (const auto& row : series["arc-strong"]) {
    CHECK(std::abs(row.lhs - 1.0) <= 1e-10);
  }

  REQUIRE(series.count("eval-disk-profile") == 1);
  const auto& prof = series["eval-disk-profile"];
  for (const auto& row : prof) {
    CHECK(std::abs(row.lhs - row.rhs) <= 1e-10);  // closed form per radius
  }
  // d = 4 entry approaches sqrt(4) = 2 at the top rung.
  const auto d4 = std::find_if(prof.begin(), prof.end(),
                               [](const hardy::ReportRow& r) { return r.dim == 4; });
  REQUIRE(d4 != prof.end());
  CHECK(std::abs(d4->lhs - 2.0) <= 1e-3);

  REQUIRE(series.count("eval-strong") == 1);
  for (const auto& row : series["eval-strong"]) {
    CHECK(std::abs(row.lhs - 1.0) <= 1e-8);
  }
}

TEST_CASE("containment gaps validate the dimension list") {
  const std::vector<int> empty;
  CHECK_THROWS_AS(hardy::verify_containment_gaps(empty), std::invalid_argument);
  const std::vector<int> unsorted = {4, 2};
  CHECK_THROWS_AS(hardy::verify_containment_gaps(unsorted), std::invalid_argument);
  const std::vector<int> repeated = {2, 2};
  CHECK_THROWS_AS(hardy::verify_containment_gaps(repeated), std::invalid_argument);
}

TEST_CASE("verdicts are a pure function of the rows") {
  const auto grid = hardy::make_grid(32);
  const auto ladder = hardy::make_ladder(6);
  auto report = hardy::verify_contraction_nonanalytic(hardy::make_rotation_symbol(2),
                                                      Exponent(2.0), ladder, grid);
  CHECK(hardy::re_verdict(report) == report.verdict);

  report.rows[0].ok = false;
  CHECK(!hardy::re_verdict(report));

  hardy::VerificationReport blank;
  CHECK(!hardy::re_verdict(blank));  // no rows, nothing verified
}
