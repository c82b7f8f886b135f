#include "xniep/xlike.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace xniep {

RealMatrix m_transform(Index n) {
  if (n < 2) throw std::invalid_argument("m_transform: order must be >= 2");
  RealMatrix M = RealMatrix::Zero(n, n);
  M.row(0).setOnes();
  M.col(0).setOnes();
  for (Index i = 1; i < n; ++i) M(i, i) = -1.0;
  return M;
}

RealMatrix m_transform_inverse(Index n) {
  if (n < 2) throw std::invalid_argument("m_transform_inverse: order must be >= 2");
  RealMatrix M(n, n);
  M.setOnes();
  for (Index i = 1; i < n; ++i) M(i, i) = 1.0 - static_cast<double>(n);
  return M / static_cast<double>(n);
}

RealVector xlike_from_list(const RealVector& list) {
  const Index n = list.size();
  if (n < 2) throw std::invalid_argument("xlike_from_list: order must be >= 2");
  RealVector x(n);
  x(0) = list.sum() / static_cast<double>(n);
  for (Index i = 1; i < n; ++i) x(i) = x(0) - list(i);
  return x;
}

XLikeFeasibility xlike_feasible(const RealVector& list) {
  const RealVector x = xlike_from_list(list);
  XLikeFeasibility result;
  result.binding_value = x.minCoeff();
  result.feasible = result.binding_value >= -k_nonneg_tol;
  if (result.feasible) {
    RealVector clamped = x;
    for (Index i = 0; i < clamped.size(); ++i)
      if (std::abs(clamped(i)) < k_nonneg_tol) clamped(i) = 0.0;
    result.witness = clamped;
  }
  return result;
}

double guo_index_xlike(const RealVector& tail) {
  if (tail.size() == 0) throw std::invalid_argument("guo_index_xlike: empty tail");
  const double n = static_cast<double>(tail.size() + 1);
  const double sum = tail.sum();
  const double closed = std::max(-sum, n * tail.maxCoeff() - sum);
  if (tail.size() <= 10) {
    const double searched = guo_index_xlike_minmax(tail);
    if (std::abs(searched - closed) > 1e-9 * std::max(1.0, std::abs(closed)))
      throw std::logic_error("guo_index_xlike: closed form disagrees with exhaustive search");
  }
  return closed;
}

double guo_index_xlike_minmax(const RealVector& tail) {
  if (tail.size() == 0) throw std::invalid_argument("guo_index_xlike_minmax: empty tail");
  const double n = static_cast<double>(tail.size() + 1);
  const double sum = tail.sum();
  std::vector<double> perm(tail.begin(), tail.end());
  std::sort(perm.begin(), perm.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = -sum;
    for (double t : perm) worst = std::max(worst, (n - 1.0) * t - (sum - t));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace xniep
