#include "xniep/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace xniep {

namespace {

bool close_abs(const Complex& a, const Complex& b, double tol) {
  return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

void require_finite(const ComplexVector& list, const char* who) {
  for (Index i = 0; i < list.size(); ++i)
    if (!is_finite(list(i))) throw std::invalid_argument(std::string(who) + ": nonfinite entry");
}

}  // namespace

bool is_conjugate_closed(const ComplexVector& list, double tol) {
  if (list.size() == 0) throw std::invalid_argument("is_conjugate_closed: empty list");
  if (!(tol > 0)) throw std::invalid_argument("is_conjugate_closed: tol must be positive");
  require_finite(list, "is_conjugate_closed");

  std::vector<Complex> upper, lower;
  for (Index i = 0; i < list.size(); ++i) {
    const Complex z = list(i);
    if (std::abs(z.imag()) < tol) continue;  // self-paired
    (z.imag() > 0 ? upper : lower).push_back(z);
  }
  if (upper.size() != lower.size()) return false;

  auto key = [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return std::abs(a.imag()) < std::abs(b.imag());
  };
  std::sort(upper.begin(), upper.end(), key);
  std::sort(lower.begin(), lower.end(), key);

  std::vector<bool> used(lower.size(), false);
  for (const Complex& u : upper) {
    bool matched = false;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      if (close_abs(std::conj(u), lower[j], tol)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

RealVector real_entries(const ComplexVector& list, double tol) {
  require_finite(list, "real_entries");
  RealVector out(list.size());
  for (Index i = 0; i < list.size(); ++i) {
    if (std::abs(list(i).imag()) >= tol)
      throw std::invalid_argument("real_entries: imaginary residue above tolerance");
    out(i) = list(i).real();
  }
  return out;
}

ComplexVector sorted_descending(ComplexVector list) {
  std::sort(list.begin(), list.end(), lex_after);
  return list;
}

bool multiset_match(const ComplexVector& a, const ComplexVector& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<Complex> rest(b.begin(), b.end());
  for (Index i = 0; i < a.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (close_abs(a(i), rest[j], tol)) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool suleimanova_check(const RealVector& list) {
  if (list.size() == 0) throw std::invalid_argument("suleimanova_check: empty list");
  if (!(list(0) > 0)) return false;
  for (Index i = 1; i < list.size(); ++i)
    if (list(i) > k_nonneg_tol) return false;
  return list.sum() >= -k_nonneg_tol;
}

DiagnosticsReport niep_diagnostics(const ComplexVector& list, int k_max, int m_max) {
  if (list.size() == 0) throw std::invalid_argument("niep_diagnostics: empty list");
  if (k_max < 1 || m_max < 1) throw std::invalid_argument("niep_diagnostics: powers must be >= 1");
  if (k_max * m_max > 512) throw std::invalid_argument("niep_diagnostics: moment range too large");
  require_finite(list, "niep_diagnostics");

  DiagnosticsReport report;
  const Index n = list.size();
  const int top = k_max * m_max;

  ComplexVector powers = list;
  for (int k = 1; k <= top; ++k) {
    report.moments[k] = powers.sum();
    if (k < top) powers = powers.cwiseProduct(list);
  }

  double max_mod = 0.0;
  for (Index i = 0; i < n; ++i) max_mod = std::max(max_mod, std::abs(list(i)));
  for (Index i = 0; i < n; ++i) {
    const Complex z = list(i);
    if (std::abs(z) >= max_mod - k_nonneg_tol && nearly_real(z) && z.real() >= -k_nonneg_tol) {
      report.perron_in_list = true;
      break;
    }
  }

  report.conjugate_closed = is_conjugate_closed(list, k_pairing_tol);

  for (int k = 1; k <= top; ++k)
    if (report.moments[k].real() < -k_pairing_tol) report.negative_moments.push_back(k);

  // s_k^m <= n^{m-1} s_{km}; equality is not a failure.
  for (int k = 1; k <= k_max; ++k) {
    for (int m = 2; m <= m_max; ++m) {
      const double lhs = std::pow(report.moments[k].real(), m);
      const double rhs = std::pow(static_cast<double>(n), m - 1) * report.moments[k * m].real();
      const double slack = k_pairing_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
      if (lhs > rhs + slack) report.moment_failures.emplace_back(k, m);
    }
  }
  return report;
}

}  // namespace xniep
