#include "xniep/circulant.hpp"

#include <cmath>

namespace xniep {

namespace {
constexpr double k_two_pi = 6.283185307179586476925286766559;
constexpr Index k_max_order = 64;
}  // namespace

ComplexVector omega_powers(Index m) {
  if (m < 1 || m > k_max_order) throw std::invalid_argument("omega_powers: order out of range");
  const Complex w(std::cos(k_two_pi / static_cast<double>(m)),
                  std::sin(k_two_pi / static_cast<double>(m)));
  ComplexVector powers(m);
  powers(0) = Complex(1.0, 0.0);
  for (Index k = 1; k < m; ++k) powers(k) = powers(k - 1) * w;
  return powers;
}

ComplexVector circ_eigenvalues(const ComplexVector& a) {
  const Index m = a.size();
  const ComplexVector w = omega_powers(m);
  ComplexVector lambdas(m);
  for (Index k = 0; k < m; ++k) {
    Complex acc(0.0, 0.0);
    for (Index l = 0; l < m; ++l) acc += a(l) * w((k * l) % m);
    lambdas(k) = acc;
  }
  return lambdas;
}

ComplexVector circ_from_eigenvalues(const ComplexVector& lambdas) {
  const Index m = lambdas.size();
  const ComplexVector w = omega_powers(m);
  ComplexVector a(m);
  for (Index k = 0; k < m; ++k) {
    Complex acc(0.0, 0.0);
    for (Index l = 0; l < m; ++l) acc += lambdas(l) * std::conj(w((k * l) % m));
    a(k) = acc / static_cast<double>(m);
  }
  return a;
}

ComplexMatrix dft_matrix(Index m) {
  const ComplexVector w = omega_powers(m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  ComplexMatrix F(m, m);
  for (Index p = 0; p < m; ++p)
    for (Index q = 0; q < m; ++q) F(p, q) = w((p * q) % m) * scale;
  return F;
}

}  // namespace xniep
