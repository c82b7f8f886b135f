#pragma once

#include "xniep/types.hpp"

#include <functional>
#include <vector>

namespace xniep {

/*
 * Independent spectrum verification.  None of this reuses the structured
 * transforms (Fourier or X-pattern folds): moments are traces of explicit
 * matrix powers, eigenvalue membership is a pivoted determinant residual,
 * and each determinant threshold is derived from the claimed data itself
 * (the product of gaps from the tested value to the remaining claimed
 * values, the first-order sensitivity of det(A - vI) to an eigenvalue
 * shift).  A claim off by 10*tol in any single eigenvalue therefore fails
 * its determinant check, including shifts of a duplicated eigenvalue.
 */

struct EigenvalueCheck {
  Complex value;
  double residual = 0.0;
  double threshold = 0.0;
  bool ok = false;
};

struct VerificationReport {
  bool pass = false;
  // max over k of |tr(A^k) - sum(claimed^k)| / scale^k, scale = max(1, max row sum).
  double moment_max_error = 0.0;
  std::vector<double> determinant_residuals;
  std::vector<EigenvalueCheck> detail;
};

// Checks tr(A^k) == sum(claimed^k) for k = 1..order within tol*scale^k, and
// |det(A - vI)| < tol * max(1, prod of gaps) for every distinct claimed v.
// Order is capped at 64; claimed must have exactly `order` entries.
VerificationReport verify_spectrum(const ComplexMatrix& A, const ComplexVector& claimed,
                                   double tol);

VerificationReport verify_spectrum(const RealMatrix& A, const ComplexVector& claimed,
                                   double tol);

// Least feasible value of a monotone feasibility family on [lo, hi], located
// by bisection to width tol.  Throws if the family is infeasible at hi;
// returns lo when already feasible there.
double brute_force_threshold(const std::function<bool(double)>& feasible, double lo,
                             double hi, double tol);

// Monic characteristic polynomial det(zI - A), ascending coefficients,
// expanded exactly over permutations.  Order <= 4.
std::vector<Complex> characteristic_polynomial(const ComplexMatrix& A);

// All roots of a monic polynomial (ascending coefficients), Durand-Kerner
// iteration with Newton polish, sorted descending by (re, im).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& monic_ascending);

// Eigenvalues of a small dense matrix via the two helpers above.  Order <= 4.
ComplexVector small_matrix_eigenvalues(const ComplexMatrix& A);

}  // namespace xniep
