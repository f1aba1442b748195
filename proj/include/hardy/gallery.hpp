#pragma once

#include "hardy/disk_function.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hardy {

enum class GalleryKind {
  diagonal_disk,
  rotation_symbol,
  evaluation_functional,
  arc_multiplier,
  unbounded_row,
  matrix_polynomial,
};

std::string kind_name(GalleryKind kind);
GalleryKind parse_kind(std::string_view name);

// Declarative description of a gallery member, the unit of JSON ingestion.
// matrix_polynomial carries either an explicit coefficient map or a seeded
// random recipe (degree + dim + seed).
struct GallerySpec {
  GalleryKind kind = GalleryKind::rotation_symbol;
  int dim = 1;
  std::map<int, MatrixValue> coeffs;
  std::optional<std::uint64_t> seed;
  int degree = 0;
};

// Disk function diag(zeta^1, ..., zeta^d).
DiskFunction make_diagonal_disk(int d);

// Circle function diag(z^0, ..., z^{d-1}): composition with rotation in the
// Fourier monomial basis. Band-limited rule, bandlimit d-1.
CircleFunction make_rotation_symbol(int d);

// Disk function (1, zeta, ..., zeta^{d-1}) as a 1 x d row: the evaluation
// functional at zeta on degree-(d-1) analytic truncations with the Hilbert
// pairing.
DiskFunction make_evaluation_functional(int d);

// Circle function constant on arcs: value diag(1, sqrt(2)*1[1<=N], ...,
// sqrt(2d)*1[d<=N]) of size (d+1) x (d+1) on the cell E_N, where E_0 is the
// upper half circle and E_N (1 <= N <= d) nests toward angle 2*pi. The point
// z = 1 belongs to E_0 by convention. Carries an exact arc partition.
CircleFunction make_arc_multiplier(int d);

// Circle function (z, z^2, ..., z^d) as a 1 x d row. Band-limited rule.
CircleFunction make_unbounded_row(int d);

// Fourier polynomial with the given coefficient map (mode -> matrix).
CircleFunction make_matrix_polynomial(const std::map<int, MatrixValue>& coeffs);

// Seeded random analytic matrix polynomial: modes 1..degree, dim x dim
// Gaussian coefficients scaled by 1/(mode^2 * sqrt(dim)) so Poisson
// deviations stay well inside verification tolerances near the boundary.
CircleFunction make_random_matrix_polynomial(int dim, int degree, std::uint64_t seed);

// Pointwise matrix transpose WITHOUT conjugation: the adjoint under the
// bilinear dual pairing. Preserves analyticity (the transpose of mode n stays
// at mode n); the conjugate-transpose would move it to mode -n.
CircleFunction banach_transpose(const CircleFunction& f);

// Size of the greedy epsilon-net of the value set {f(z_j)} under
// operator-norm distance, scanning nodes in index order. Deterministic.
int separability_witness(const SampledFunction& f, double epsilon);

// Builds the member a GallerySpec describes.
std::variant<CircleFunction, DiskFunction> build_gallery(const GallerySpec& spec);

}  // namespace hardy
