#include "doctest.h"
#include "helpers.hpp"
#include "xniep/circulant.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace xniep;
using testutil::cvec;
using testutil::max_abs_diff;

TEST_CASE("circulant places a[(c - r) mod m] at (r, c)") {
  const ComplexMatrix C = circulant<Complex>(cvec({{1, 0}, {2, 0}, {3, 0}}));
  ComplexMatrix want(3, 3);
  want << 1, 2, 3, 3, 1, 2, 2, 3, 1;
  CHECK(max_abs_diff(C, want) == 0.0);
  CHECK_THROWS_AS(circulant<Complex>(ComplexVector(0)), std::invalid_argument);
}

TEST_CASE("circ_eigenvalues matches direct power sums") {
  CHECK(max_abs_diff(circ_eigenvalues(cvec({{1.5, 0}, {2, 0}, {2.5, 0}, {2, 0}})),
                     cvec({{8, 0}, {-1, 0}, {0, 0}, {-1, 0}})) < 1e-12);
  CHECK(max_abs_diff(circ_eigenvalues(cvec({{4.5, 0}, {0, 0}, {0, 0}})),
                     cvec({{4.5, 0}, {4.5, 0}, {4.5, 0}})) < 1e-12);
  CHECK(max_abs_diff(circ_eigenvalues(cvec({{0, 0}, {0.75, 0}, {0.75, 0}})),
                     cvec({{1.5, 0}, {-0.75, 0}, {-0.75, 0}})) < 1e-12);
}

TEST_CASE("circ_from_eigenvalues inverts the eigenvalue map") {
  CHECK(max_abs_diff(circ_from_eigenvalues(cvec({{8, 0}, {-1, 0}, {0, 0}, {-1, 0}})),
                     cvec({{1.5, 0}, {2, 0}, {2.5, 0}, {2, 0}})) < 1e-12);
  CHECK(max_abs_diff(circ_from_eigenvalues(cvec({{7, 0}, {7, 0}, {7, 0}})),
                     cvec({{7, 0}, {0, 0}, {0, 0}})) < 1e-12);
  CHECK(max_abs_diff(circ_from_eigenvalues(cvec({{1.5, 0}, {-0.75, 0}, {-0.75, 0}})),
                     cvec({{0, 0}, {0.75, 0}, {0.75, 0}})) < 1e-12);
}

TEST_CASE("dft_matrix small orders and unitarity") {
  CHECK(max_abs_diff(dft_matrix(1), ComplexMatrix::Ones(1, 1)) < 1e-15);

  ComplexMatrix f2(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  f2 << s, s, s, -s;
  CHECK(max_abs_diff(dft_matrix(2), f2) < 1e-15);

  const ComplexMatrix f4 = dft_matrix(4);
  CHECK(max_abs_diff(2.0 * f4.row(1).transpose(),
                     cvec({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})) < 1e-12);

  for (Index m = 1; m <= 16; ++m) {
    const ComplexMatrix f = dft_matrix(m);
    CHECK(max_abs_diff(f * f.adjoint(), ComplexMatrix::Identity(m, m)) < 1e-10);
    CHECK(max_abs_diff(f, f.transpose()) < 1e-12);
  }
  CHECK_THROWS_AS(dft_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(dft_matrix(65), std::invalid_argument);
}

TEST_CASE("the DFT diagonalizes every circulant") {
  std::mt19937 rng(5031);
  for (Index m = 1; m <= 16; ++m) {
    const ComplexVector a = testutil::random_complex_row(rng, m);
    const ComplexMatrix f = dft_matrix(m);
    const ComplexMatrix d = f.adjoint() * circulant<Complex>(a) * f;
    const ComplexVector lam = circ_eigenvalues(a);
    ComplexMatrix off = d;
    off.diagonal().setZero();
    CHECK(off.cwiseAbs().maxCoeff() < 1e-9);
    CHECK(max_abs_diff(d.diagonal(), lam) < 1e-9);
  }
}

TEST_CASE("eigenvalue/coefficient roundtrips hold to 1e-10") {
  std::mt19937 rng(5032);
  for (Index m = 1; m <= 16; ++m) {
    const ComplexVector a = testutil::random_complex_row(rng, m);
    CHECK(max_abs_diff(circ_from_eigenvalues(circ_eigenvalues(a)), a) < 1e-10);
    const ComplexVector lam = testutil::random_complex_row(rng, m);
    CHECK(max_abs_diff(circ_eigenvalues(circ_from_eigenvalues(lam)), lam) < 1e-10);
  }
}

TEST_CASE("real rows give conjugate-symmetric eigenvalues and exact row sums") {
  std::mt19937 rng(5033);
  for (Index m = 2; m <= 12; ++m) {
    const ComplexVector a = testutil::random_real_row(rng, m);
    const ComplexVector lam = circ_eigenvalues(a);
    CHECK(std::abs(lam(0) - a.sum()) < 1e-12);
    for (Index k = 1; k < m; ++k)
      CHECK(std::abs(lam(m - k) - std::conj(lam(k))) < 1e-9);
  }
}
