#include "doctest.h"
#include "helpers.hpp"
#include "xniep/block.hpp"
#include "xniep/oracle.hpp"
#include "xniep/spectra.hpp"
#include "xniep/xlike.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace xniep;
using testutil::cvec;
using testutil::max_abs_diff;
using testutil::rvec;

TEST_CASE("verify_spectrum accepts correct claims") {
  const RealMatrix X = materialize_xlike(rvec({10, 2, 3, 4, 5}));
  CHECK(verify_spectrum(X, cvec({{24, 0}, {8, 0}, {7, 0}, {6, 0}, {5, 0}}), 1e-8).pass);

  const RealMatrix eye = RealMatrix::Identity(4, 4);
  CHECK(verify_spectrum(eye, cvec({{1, 0}, {1, 0}, {1, 0}, {1, 0}}), 1e-10).pass);

  const BlockAssembly assembly = make_xlike_assembly(
      {cvec({{0, 0}, {0.75, 0}, {0.75, 0}}), cvec({{2, 0}, {0.25, 0}, {0.25, 0}})});
  const ComplexVector claimed =
      cvec({{4, 0}, {1, 0}, {1, 0}, {-1, 0}, {-2.5, 0}, {-2.5, 0}});
  CHECK(verify_spectrum(materialize_real(assembly), claimed, 1e-8).pass);
}

TEST_CASE("verify_spectrum rejects each singly perturbed eigenvalue") {
  const RealMatrix X = materialize_xlike(rvec({10, 2, 3, 4, 5}));
  const ComplexVector truth = cvec({{24, 0}, {8, 0}, {7, 0}, {6, 0}, {5, 0}});
  for (Index i = 0; i < truth.size(); ++i) {
    ComplexVector bad = truth;
    bad(i) += 1e-2;
    CHECK_FALSE(verify_spectrum(X, bad, 1e-3).pass);
  }
  CHECK(verify_spectrum(X, truth, 1e-3).pass);
}

TEST_CASE("verify_spectrum detects a shifted duplicate") {
  // Both copies of the double eigenvalue 1 must be where claimed.
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 1;
  d(2, 2) = 1;
  CHECK(verify_spectrum(d, cvec({{2, 0}, {1, 0}, {1, 0}}), 1e-6).pass);
  CHECK_FALSE(verify_spectrum(d, cvec({{2, 0}, {1, 0}, {1.01, 0}}), 1e-6).pass);
}

TEST_CASE("verify_spectrum validates its inputs") {
  const RealMatrix tall = RealMatrix::Zero(2, 3);
  const RealMatrix square = RealMatrix::Zero(2, 2);
  CHECK_THROWS_AS(verify_spectrum(tall, cvec({{0, 0}, {0, 0}}), 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(verify_spectrum(square, cvec({{0, 0}}), 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(verify_spectrum(square, cvec({{0, 0}, {0, 0}}), 0.0), std::invalid_argument);
}

TEST_CASE("brute_force_threshold bisects monotone families") {
  const RealVector tail = rvec({5, 6, 7, 8});
  const auto feasible = [&](double lam) {
    RealVector list(5);
    list(0) = lam;
    list.tail(4) = tail;
    return xlike_feasible(list).feasible;
  };
  CHECK(brute_force_threshold(feasible, 8.0, 80.0, 1e-10) == doctest::Approx(14).epsilon(1e-9));
  CHECK(brute_force_threshold([](double) { return true; }, 3.0, 9.0, 1e-10) == 3.0);
  CHECK_THROWS_AS(brute_force_threshold([](double) { return false; }, 0.0, 1.0, 1e-10),
                  std::domain_error);
}

TEST_CASE("characteristic_polynomial expands exactly for small orders") {
  ComplexMatrix a(2, 2);
  a << 0, 1, 1, 0;
  const auto poly = characteristic_polynomial(a);  // z^2 - 1
  REQUIRE(poly.size() == 3);
  CHECK(std::abs(poly[0] - Complex(-1, 0)) < 1e-14);
  CHECK(std::abs(poly[1]) < 1e-14);
  CHECK(std::abs(poly[2] - Complex(1, 0)) < 1e-14);
  CHECK_THROWS_AS(characteristic_polynomial(ComplexMatrix::Zero(5, 5)), std::invalid_argument);
}

TEST_CASE("polynomial_roots finds all roots sorted descending") {
  // (z - 2)(z + 1)(z - i)(z + i) = z^4 - z^3 - z^2 - z - 2
  const std::vector<Complex> poly = {{-2, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {1, 0}};
  const auto roots = polynomial_roots(poly);
  REQUIRE(roots.size() == 4);
  CHECK(std::abs(roots[0] - Complex(2, 0)) < 1e-9);
  CHECK(std::abs(roots[1] - Complex(0, 1)) < 1e-9);
  CHECK(std::abs(roots[2] - Complex(0, -1)) < 1e-9);
  CHECK(std::abs(roots[3] - Complex(-1, 0)) < 1e-9);
}

TEST_CASE("small_matrix_eigenvalues agrees with known spectra") {
  std::mt19937 rng(6041);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 3);
    const RealVector x = testutil::random_tail(rng, n, 0.0, 4.0);
    const ComplexMatrix X = materialize_xlike(x).cast<Complex>();
    const ComplexVector lam = small_matrix_eigenvalues(X);
    CHECK(multiset_match(lam, spectrum_of_xlike(x).cast<Complex>(), 1e-8));
  }
}
