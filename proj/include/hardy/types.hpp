#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace hardy {

using Complex = std::complex<double>;

// Dense complex matrix; every function value in this library is one of these.
// Scalar-valued functions use 1x1 matrices.
using MatrixValue = Eigen::MatrixXcd;

// Thrown when an operation is asked for data a representation cannot supply
// (e.g. evaluating a pure sample table between its nodes).
class not_representable_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative/extrapolated quantity fails its convergence check.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown when an input description (JSON spec, CLI value) is malformed.
class spec_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(const MatrixValue& a) {
  return a.allFinite();
}

inline void require_finite(const MatrixValue& a, const std::string& what) {
  if (!a.allFinite()) {
    throw std::invalid_argument(what + ": matrix contains a non-finite entry");
  }
}

inline double max_abs(const MatrixValue& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const MatrixValue& a, const MatrixValue& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

// z^n for integer n by binary exponentiation. Negative powers invert first;
// z must be nonzero in that case.
inline Complex ipow(Complex z, long long n) {
  if (n < 0) {
    if (z == Complex(0.0, 0.0)) {
      throw std::domain_error("ipow: negative power of zero");
    }
    z = 1.0 / z;
    n = -n;
  }
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

// z^n for z on the unit circle, evaluated through the argument so the result
// stays on the circle to machine precision even for large |n|.
inline Complex unit_pow(Complex z, long long n) {
  return std::polar(1.0, static_cast<double>(n) * std::arg(z));
}

}  // namespace hardy
