#pragma once

#include "xniep/types.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace xniep {

/*
 * X-pattern permutative matrices.  The materialization of a defining row x
 * repeats x in every row, except that row i swaps positions 0 and i.  The
 * spectrum is linear in x: it is (sum(x), x0 - x1, ..., x0 - x_{n-1}), so
 * realization, feasibility, and the minimal admissible Perron root are all
 * closed-form.  Everything here is templated on the scalar so the same
 * pattern serves real defining rows and the complex per-coefficient slices
 * used by the block pipeline.
 */

template <typename Scalar>
DenseMatrix<Scalar> materialize_xlike(const DenseVector<Scalar>& x) {
  const Index n = x.size();
  if (n < 2) throw std::invalid_argument("materialize_xlike: order must be >= 2");
  DenseMatrix<Scalar> X(n, n);
  for (Index i = 0; i < n; ++i) {
    X.row(i) = x.transpose();
    X(i, 0) = x(i);
    X(i, i) = x(0);
  }
  return X;
}

template <typename Scalar>
DenseVector<Scalar> spectrum_of_xlike(const DenseVector<Scalar>& x) {
  const Index n = x.size();
  if (n < 2) throw std::invalid_argument("spectrum_of_xlike: order must be >= 2");
  DenseVector<Scalar> lam(n);
  lam(0) = x.sum();
  for (Index i = 1; i < n; ++i) lam(i) = x(0) - x(i);
  return lam;
}

// The involution sending defining rows to spectra: first row sums, the rest
// are first differences.  m_transform_inverse(n) * m_transform(n) == I.
RealMatrix m_transform(Index n);
RealMatrix m_transform_inverse(Index n);

// Defining row realizing the list: x0 = mean(list), xi = x0 - list(i).
RealVector xlike_from_list(const RealVector& list);

struct XLikeFeasibility {
  bool feasible = false;
  std::optional<RealVector> witness;  // clamped defining row, present iff feasible
  double binding_value = 0.0;         // least entry of the candidate row
};

// A list is realizable by a nonnegative X-pattern matrix iff its candidate
// defining row is entrywise >= -1e-12.
XLikeFeasibility xlike_feasible(const RealVector& list);

// Least Perron root lambda for which (lambda, tail...) is realizable:
// max(-sum(tail), n*max(tail) - sum(tail)) with n = tail.size() + 1.
// Cross-checked in-op against the exhaustive tail-permutation min-max.
double guo_index_xlike(const RealVector& tail);

// Exhaustive min over tail permutations of the per-arrangement threshold.
double guo_index_xlike_minmax(const RealVector& tail);

// Row j of the result is a permuted by tau[j]; tau[0] must be the identity.
template <typename Scalar>
DenseMatrix<Scalar> tau_apply(const std::vector<std::vector<int>>& tau,
                              const DenseVector<Scalar>& a) {
  const Index n = a.size();
  if (static_cast<Index>(tau.size()) != n)
    throw std::invalid_argument("tau_apply: dimension mismatch");
  for (Index j = 0; j < n; ++j) {
    if (static_cast<Index>(tau[j].size()) != n)
      throw std::invalid_argument("tau_apply: dimension mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int image : tau[j]) {
      if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)])
        throw std::invalid_argument("tau_apply: not a permutation");
      seen[static_cast<std::size_t>(image)] = true;
    }
  }
  for (Index c = 0; c < n; ++c)
    if (tau[0][static_cast<std::size_t>(c)] != c)
      throw std::invalid_argument("tau_apply: first permutation must be the identity");

  DenseMatrix<Scalar> M(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index c = 0; c < n; ++c) M(j, c) = a(tau[j][static_cast<std::size_t>(c)]);
  return M;
}

template <typename Scalar>
DenseVector<Scalar> xlike_linear_combination(const std::vector<Scalar>& coeffs,
                                             const std::vector<DenseVector<Scalar>>& rows) {
  if (coeffs.size() != rows.size() || rows.empty())
    throw std::invalid_argument("xlike_linear_combination: dimension mismatch");
  DenseVector<Scalar> out = DenseVector<Scalar>::Zero(rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.size())
      throw std::invalid_argument("xlike_linear_combination: dimension mismatch");
    out += coeffs[i] * rows[i];
  }
  return out;
}

}  // namespace xniep
