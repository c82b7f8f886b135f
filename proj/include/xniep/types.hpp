#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace xniep {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

template <typename Scalar>
using DenseVector = Eigen::Vector<Scalar, Eigen::Dynamic>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Absolute conjugate-pairing tolerance, applied to each component; an entry
// with |im| below it counts as real.
inline constexpr double k_pairing_tol = 1e-9;

// Entrywise nonnegativity margin.  Emitted matrices clamp magnitudes below
// it to zero so boundary constructions print clean zeros.
inline constexpr double k_nonneg_tol = 1e-12;

inline bool nearly_real(const Complex& z, double tol = k_pairing_tol) {
  return std::abs(z.imag()) < tol;
}

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Canonical ordering: descending by real part, ties by imaginary part.
inline bool lex_after(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

}  // namespace xniep
