#pragma once

#include "xniep/types.hpp"

#include <stdexcept>

namespace xniep {

// First m powers of the principal m-th root of unity, built by repeated
// multiplication.  Callers index with exponents reduced mod m.
ComplexVector omega_powers(Index m);

// circ(a): row r is the r-fold cyclic right shift of a, entry (r, c) = a[(c - r) mod m].
template <typename Scalar>
DenseMatrix<Scalar> circulant(const DenseVector<Scalar>& a) {
  const Index m = a.size();
  if (m < 1) throw std::invalid_argument("circulant: empty defining row");
  DenseMatrix<Scalar> C(m, m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c) C(r, c) = a(((c - r) % m + m) % m);
  return C;
}

// lambda_k = sum_l a_l omega^{k l}.
ComplexVector circ_eigenvalues(const ComplexVector& a);

// Inverse transform: a_k = (1/m) sum_l lambda_l omega^{-k l}.
ComplexVector circ_from_eigenvalues(const ComplexVector& lambdas);

// Unitary Fourier matrix, entry (p, q) = omega^{p q} / sqrt(m); 1 <= m <= 64.
// Diagonalizes every circulant: circ(a) = F diag(circ_eigenvalues(a)) F^*.
ComplexMatrix dft_matrix(Index m);

}  // namespace xniep
