#include "xniep/oracle.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace xniep {

namespace {

constexpr Index k_max_order = 64;

double max_abs_row_sum(const ComplexMatrix& A) {
  double best = 0.0;
  for (Index r = 0; r < A.rows(); ++r) best = std::max(best, A.row(r).cwiseAbs().sum());
  return best;
}

Complex poly_eval(const std::vector<Complex>& coeffs, const Complex& z) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

}  // namespace

VerificationReport verify_spectrum(const ComplexMatrix& A, const ComplexVector& claimed,
                                   double tol) {
  const Index order = A.rows();
  if (A.cols() != order) throw std::invalid_argument("verify_spectrum: matrix not square");
  if (order < 1 || order > k_max_order)
    throw std::invalid_argument("verify_spectrum: order out of range");
  if (claimed.size() != order)
    throw std::invalid_argument("verify_spectrum: claimed list length != order");
  if (!(tol > 0)) throw std::invalid_argument("verify_spectrum: tol must be positive");

  VerificationReport report;
  const double scale = std::max(1.0, max_abs_row_sum(A));

  bool moments_ok = true;
  ComplexMatrix power = A;
  ComplexVector claimed_power = claimed;
  double bound = scale;
  for (Index k = 1; k <= order; ++k) {
    const double diff = std::abs(power.trace() - claimed_power.sum());
    report.moment_max_error = std::max(report.moment_max_error, diff / bound);
    if (diff > tol * bound) moments_ok = false;
    if (k < order) {
      power *= A;
      claimed_power = claimed_power.cwiseProduct(claimed);
      bound *= scale;
    }
  }

  bool determinants_ok = true;
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (Index i = 0; i < order; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    const Complex v = claimed(i);
    double gaps = 1.0;
    for (Index j = 0; j < order; ++j) {
      if (j == i) continue;
      const double d = std::abs(claimed(j) - v);
      if (j > i && d <= 1e-12) seen[static_cast<std::size_t>(j)] = true;
      gaps *= d;
    }
    ComplexMatrix shifted = A;
    shifted.diagonal().array() -= v;
    const double residual = std::abs(Eigen::PartialPivLU<ComplexMatrix>(shifted).determinant());
    const double threshold = tol * std::max(1.0, gaps);
    const bool ok = residual < threshold;
    determinants_ok = determinants_ok && ok;
    report.determinant_residuals.push_back(residual);
    report.detail.push_back({v, residual, threshold, ok});
  }

  report.pass = moments_ok && determinants_ok;
  return report;
}

VerificationReport verify_spectrum(const RealMatrix& A, const ComplexVector& claimed,
                                   double tol) {
  return verify_spectrum(ComplexMatrix(A.cast<Complex>()), claimed, tol);
}

double brute_force_threshold(const std::function<bool(double)>& feasible, double lo,
                             double hi, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("brute_force_threshold: tol must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("brute_force_threshold: empty interval");
  if (!feasible(hi)) throw std::domain_error("brute_force_threshold: infeasible at upper end");
  if (feasible(lo)) return lo;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // interval exhausted at double precision
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<Complex> characteristic_polynomial(const ComplexMatrix& A) {
  const Index n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  if (n < 1 || n > 4) throw std::invalid_argument("characteristic_polynomial: order must be <= 4");

  // det(A - zI) summed over permutations, then normalized monic.
  std::vector<Complex> det(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;

    std::vector<Complex> term = {Complex(sign, 0.0)};
    for (Index i = 0; i < n; ++i) {
      const Complex a = A(i, perm[static_cast<std::size_t>(i)]);
      if (perm[static_cast<std::size_t>(i)] == i) {
        // multiply by (a - z)
        std::vector<Complex> next(term.size() + 1, Complex(0.0, 0.0));
        for (std::size_t d = 0; d < term.size(); ++d) {
          next[d] += term[d] * a;
          next[d + 1] -= term[d];
        }
        term = std::move(next);
      } else {
        for (Complex& c : term) c *= a;
      }
    }
    for (std::size_t d = 0; d < term.size(); ++d) det[d] += term[d];
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // det(zI - A) = (-1)^n det(A - zI)
  std::vector<Complex> monic(det.size());
  for (std::size_t d = 0; d < det.size(); ++d) monic[d] = sign * det[d];
  return monic;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& monic_ascending) {
  if (monic_ascending.empty() || std::abs(monic_ascending.back() - Complex(1.0, 0.0)) > 1e-9)
    throw std::invalid_argument("polynomial_roots: polynomial must be monic");
  const std::size_t degree = monic_ascending.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {-monic_ascending[0]};

  double radius = 0.0;
  for (std::size_t i = 0; i < degree; ++i) radius = std::max(radius, std::abs(monic_ascending[i]));
  radius += 1.0;

  std::vector<Complex> roots(degree);
  const Complex seed(0.4, 0.9);
  Complex spin = seed;
  for (std::size_t i = 0; i < degree; ++i) {
    roots[i] = radius * spin;
    spin *= seed;
  }

  for (int iter = 0; iter < 1000; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < degree; ++i) {
      Complex denom(1.0, 0.0);
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) < 1e-300) {
        roots[i] += Complex(1e-8, 1e-8);
        max_step = 1.0;
        continue;
      }
      const Complex step = poly_eval(monic_ascending, roots[i]) / denom;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(roots[i])));
    }
    if (max_step < 1e-14) break;
  }

  // Newton polish; skipped near critical points where it would misbehave.
  std::vector<Complex> derivative(degree);
  for (std::size_t i = 1; i <= degree; ++i)
    derivative[i - 1] = static_cast<double>(i) * monic_ascending[i];
  for (Complex& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex dp = poly_eval(derivative, r);
      if (std::abs(dp) < 1e-12 * (1.0 + std::abs(r))) break;
      r -= poly_eval(monic_ascending, r) / dp;
    }
  }

  std::sort(roots.begin(), roots.end(), lex_after);
  return roots;
}

ComplexVector small_matrix_eigenvalues(const ComplexMatrix& A) {
  const std::vector<Complex> roots = polynomial_roots(characteristic_polynomial(A));
  ComplexVector out(static_cast<Index>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i) out(static_cast<Index>(i)) = roots[i];
  return out;
}

}  // namespace xniep
