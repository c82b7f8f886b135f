#pragma once

#include "xniep/block.hpp"
#include "xniep/types.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testutil {

using xniep::BlockAssembly;
using xniep::BlockPattern;
using xniep::Complex;
using xniep::ComplexMatrix;
using xniep::ComplexVector;
using xniep::Index;
using xniep::RealVector;

inline RealVector rvec(std::initializer_list<double> xs) {
  RealVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline ComplexVector cvec(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Complex& x : xs) v(i++) = x;
  return v;
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline RealVector random_tail(std::mt19937& rng, Index size, double lo = -10.0,
                              double hi = 10.0) {
  RealVector t(size);
  for (Index i = 0; i < size; ++i) t(i) = uniform(rng, lo, hi);
  return t;
}

inline ComplexVector random_complex_row(std::mt19937& rng, Index m, double span = 5.0) {
  ComplexVector a(m);
  for (Index i = 0; i < m; ++i)
    a(i) = Complex(uniform(rng, -span, span), uniform(rng, -span, span));
  return a;
}

inline ComplexVector random_real_row(std::mt19937& rng, Index m, double span = 5.0) {
  ComplexVector a(m);
  for (Index i = 0; i < m; ++i) a(i) = Complex(uniform(rng, -span, span), 0.0);
  return a;
}

// Conjugate-paired columns, real first column, and a (0,0) entry dominating
// the moduli of the remaining entries, so the result passes strict validation.
inline ComplexMatrix random_valid_E(std::mt19937& rng, Index n, Index m) {
  ComplexMatrix E(n, m);
  for (Index i = 0; i < n; ++i) E(i, 0) = uniform(rng, -3.0, 3.0);
  for (Index l = 1; 2 * l < m; ++l)
    for (Index i = 0; i < n; ++i) {
      E(i, l) = Complex(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
      E(i, m - l) = std::conj(E(i, l));
    }
  if (m % 2 == 0 && m > 1)
    for (Index i = 0; i < n; ++i) E(i, m / 2) = uniform(rng, -3.0, 3.0);
  double rest = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      if (i != 0 || j != 0) rest += std::abs(E(i, j));
  E(0, 0) = rest + uniform(rng, 1.0, 4.0);
  return E;
}

inline BlockAssembly random_real_assembly(std::mt19937& rng, Index n, Index m) {
  std::vector<ComplexVector> rows;
  for (Index i = 0; i < n * n; ++i) rows.push_back(random_real_row(rng, m));
  return xniep::make_block_assembly(n, m, std::move(rows), BlockPattern::General);
}

inline BlockAssembly random_xlike_assembly(std::mt19937& rng, Index n, Index m) {
  std::vector<ComplexVector> gens;
  for (Index t = 0; t < n; ++t) gens.push_back(random_real_row(rng, m));
  return xniep::make_xlike_assembly(gens);
}

}  // namespace testutil
