#pragma once

#include "xniep/types.hpp"

#include <map>
#include <utility>
#include <vector>

namespace xniep {

// True iff the multiset equals its conjugate multiset: every entry with
// |im| >= tol is matched to a distinct partner within tol per component,
// near-real entries pair with themselves.
bool is_conjugate_closed(const ComplexVector& list, double tol = k_pairing_tol);

// Real parts of a list whose imaginary residues all stay below tol.
// Throws std::invalid_argument otherwise.
RealVector real_entries(const ComplexVector& list, double tol = k_pairing_tol);

ComplexVector sorted_descending(ComplexVector list);

// Greedy multiset matching with an absolute per-component tolerance.
bool multiset_match(const ComplexVector& a, const ComplexVector& b, double tol);

// Suleimanova test: first entry strictly positive, every tail entry <= 0,
// and the total sum nonnegative.  Tail order is irrelevant.
bool suleimanova_check(const RealVector& list);

struct DiagnosticsReport {
  bool perron_in_list = false;
  bool conjugate_closed = false;
  std::map<int, Complex> moments;                    // k -> s_k
  std::vector<int> negative_moments;                 // k with Re s_k < 0
  std::vector<std::pair<int, int>> moment_failures;  // (k_pow, m_pow)

  bool all_passed() const {
    return perron_in_list && conjugate_closed && negative_moments.empty() &&
           moment_failures.empty();
  }
};

// Necessary-condition survey for a prescribed spectrum: Perron membership,
// conjugate closure, moment signs s_k >= 0, and the power inequalities
// s_k^m <= n^{m-1} s_{km} for k <= k_max, m <= m_max.  Report-only.
DiagnosticsReport niep_diagnostics(const ComplexVector& list, int k_max, int m_max);

}  // namespace xniep
