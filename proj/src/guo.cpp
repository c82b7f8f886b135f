#include "xniep/guo.hpp"

#include "xniep/circulant.hpp"
#include "xniep/oracle.hpp"
#include "xniep/xlike.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xniep {

namespace {

Index flat(Index m, Index r, Index c) { return r * m + c; }

struct ThresholdScan {
  double phi = 0.0;
  Index k = 0;
  Index j = 0;
};

// Every candidate entry of the coefficient generators is affine in E(0,0)
// with slope 1/(m*n), so entry (j,k) >= 0 exactly when E(0,0) clears
// E(0,0) - m*n*Re(gen(j,k)), a quantity independent of E(0,0) itself.
ThresholdScan scan_threshold(double lead, const ComplexMatrix& gen, double residue_tol) {
  const Index n = gen.rows();
  const Index m = gen.cols();
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  ThresholdScan out;
  bool first = true;
  for (Index k = 0; k < m; ++k)
    for (Index j = 0; j < n; ++j) {
      if (std::abs(mn * gen(j, k).imag()) >= residue_tol)
        throw std::invalid_argument(
            "phi: coefficient generator has imaginary residue; conjugate pairing is broken");
      const double term = lead - mn * gen(j, k).real();
      if (first || term > out.phi) {
        out.phi = term;
        out.k = k;
        out.j = j;
        first = false;
      }
    }
  return out;
}

double max_other_modulus(const ComplexMatrix& E) {
  double best = 0.0;
  for (Index i = 0; i < E.rows(); ++i)
    for (Index j = 0; j < E.cols(); ++j)
      if (i != 0 || j != 0) best = std::max(best, std::abs(E(i, j)));
  return best;
}

std::vector<int> identity_assignment(Index count) {
  std::vector<int> a(static_cast<std::size_t>(count));
  std::iota(a.begin(), a.end(), 0);
  return a;
}

ComplexMatrix generator_product(const ComplexMatrix& E) {
  const Index m = E.cols();
  return (m_transform_inverse(E.rows()).cast<Complex>() * E * dft_matrix(m).adjoint()) /
         std::sqrt(static_cast<double>(m));
}

}  // namespace

void require_valid(const ComplexMatrix& E, ValidationMode mode) {
  const Index n = E.rows();
  const Index m = E.cols();
  if (n < 2) throw std::invalid_argument("eigenvalue matrix: needs at least two rows");
  if (m < 1) throw std::invalid_argument("eigenvalue matrix: needs at least one column");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      if (!is_finite(E(i, j))) throw std::invalid_argument("eigenvalue matrix: nonfinite entry");
  for (Index i = 0; i < n; ++i)
    if (!nearly_real(E(i, 0)))
      throw std::invalid_argument("eigenvalue matrix: first column must be real");
  for (Index l = 1; 2 * l <= m; ++l)
    for (Index i = 0; i < n; ++i)
      if (std::abs(E(i, l) - std::conj(E(i, m - l))) > k_pairing_tol)
        throw std::invalid_argument(
            "eigenvalue matrix: columns l and m-l must be conjugate pairs");
  if (E.sum().real() < -k_pairing_tol)
    throw std::invalid_argument("eigenvalue matrix: entry sum must be nonnegative");
  if (mode == ValidationMode::Strict) {
    const double lead = E(0, 0).real();
    if (lead <= 0.0)
      throw std::invalid_argument("eigenvalue matrix: leading entry must be positive");
    const double lead_mod = std::abs(E(0, 0));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j)
        if (std::abs(E(i, j)) > lead_mod + k_pairing_tol)
          throw std::invalid_argument(
              "eigenvalue matrix: leading entry must have maximal modulus");
  }
}

ComplexMatrix spectral_generators(const ComplexMatrix& E) {
  require_valid(E, ValidationMode::Query);
  return m_transform_inverse(E.rows()).cast<Complex>() * E;
}

SpectralFamily build_spectral_family(const ComplexMatrix& E) {
  const ComplexMatrix s = spectral_generators(E);
  SpectralFamily family;
  family.reserve(static_cast<std::size_t>(E.cols()));
  for (Index l = 0; l < E.cols(); ++l) {
    const ComplexVector column = s.col(l);
    family.push_back(materialize_xlike<Complex>(column));
  }
  return family;
}

ComplexMatrix fast_L_product(const ComplexMatrix& E) {
  require_valid(E, ValidationMode::Query);
  return generator_product(E);
}

GuoReport phi_threshold(const ComplexMatrix& E) {
  require_valid(E, ValidationMode::Query);
  const ComplexMatrix gen = generator_product(E);
  const ThresholdScan scan = scan_threshold(E(0, 0).real(), gen, k_pairing_tol);
  GuoReport report;
  report.phi = scan.phi;
  report.binding_k = scan.k;
  report.binding_j = scan.j;
  report.arrangement = identity_arrangement(E);
  report.feasible_at = scan.phi;
  report.mode = SearchMode::Exhaustive;
  report.visited = 1;
  report.upper_bound = false;
  report.dominance_ok = scan.phi + k_pairing_tol >= max_other_modulus(E);
  return report;
}

BlockConstruction construct_block(const ComplexMatrix& E) {
  BlockConstruction out;
  out.threshold = phi_threshold(E);
  const Index n = E.rows();
  const ComplexMatrix gen = generator_product(E);
  out.generators = gen.real();
  out.min_entry = out.generators.minCoeff();
  out.violation_k = out.threshold.binding_k;
  out.violation_j = out.threshold.binding_j;
  out.feasible = E(0, 0).real() >= out.threshold.phi - k_nonneg_tol;
  if (!out.feasible) return out;

  for (Index r = 0; r < out.generators.rows(); ++r)
    for (Index c = 0; c < out.generators.cols(); ++c)
      if (std::abs(out.generators(r, c)) < k_nonneg_tol) out.generators(r, c) = 0.0;
  std::vector<ComplexVector> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (Index t = 0; t < n; ++t) {
    const RealVector row = out.generators.row(t).transpose();
    rows.push_back(row.cast<Complex>());
  }
  out.assembly = make_xlike_assembly(rows);
  return out;
}

Arrangement identity_arrangement(const ComplexMatrix& E) {
  return {identity_assignment(E.size()), Provenance::Identity};
}

Arrangement column_swap_arrangement(const ComplexMatrix& E) {
  const Index n = E.rows();
  const Index m = E.cols();
  std::vector<int> a = identity_assignment(n * m);
  if (m >= 3)
    for (Index r = 0; r < n; ++r) {
      a[static_cast<std::size_t>(flat(m, r, 1))] = static_cast<int>(flat(m, r, m - 1));
      a[static_cast<std::size_t>(flat(m, r, m - 1))] = static_cast<int>(flat(m, r, 1));
    }
  return {std::move(a), Provenance::ColumnSwap};
}

Arrangement global_conjugation_arrangement(const ComplexMatrix& E) {
  const Index n = E.rows();
  const Index m = E.cols();
  std::vector<int> a(static_cast<std::size_t>(n * m));
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < m; ++c)
      a[static_cast<std::size_t>(flat(m, r, c))] = static_cast<int>(flat(m, r, (m - c) % m));
  return {std::move(a), Provenance::GlobalConjugation};
}

Arrangement tail_conjugation_arrangement(const ComplexMatrix& E) {
  // The first column of a valid E is real, so conjugating it changes nothing:
  // the slot permutation coincides with global conjugation.
  Arrangement a = global_conjugation_arrangement(E);
  a.provenance = Provenance::TailConjugation;
  return a;
}

ComplexMatrix apply_arrangement(const ComplexMatrix& E, const Arrangement& f) {
  const Index n = E.rows();
  const Index m = E.cols();
  const Index count = n * m;
  if (static_cast<Index>(f.assignment.size()) != count)
    throw std::invalid_argument("apply_arrangement: assignment size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  for (int s : f.assignment) {
    if (s < 0 || s >= count || seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument(
          "apply_arrangement: assignment is not a permutation of the entry slots");
    seen[static_cast<std::size_t>(s)] = true;
  }
  ComplexMatrix out(n, m);
  for (Index t = 0; t < count; ++t) {
    const int s = f.assignment[static_cast<std::size_t>(t)];
    out(t / m, t % m) = E(s / m, s % m);
  }
  return out;
}

bool ennss_check(const ComplexMatrix& E, const Arrangement& f) {
  const ComplexMatrix Ef = apply_arrangement(E, f);
  const Index n = E.rows();
  const Index m = E.cols();
  if (std::abs(Ef(0, 0) - E(0, 0)) > k_pairing_tol) return false;
  const double lead_mod = std::abs(Ef(0, 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      if (std::abs(Ef(i, j)) > lead_mod + k_pairing_tol) return false;
  RealVector first(n);
  for (Index i = 0; i < n; ++i) {
    if (!nearly_real(Ef(i, 0))) return false;
    first(i) = Ef(i, 0).real();
  }
  if (!xlike_feasible(first).feasible) return false;
  for (Index l = 1; 2 * l <= m; ++l)
    for (Index i = 0; i < n; ++i)
      if (std::abs(Ef(i, l) - std::conj(Ef(i, m - l))) > k_pairing_tol) return false;
  return true;
}

GuoReport guo_index_block(const ComplexMatrix& E, SearchMode mode, long long cap) {
  require_valid(E, ValidationMode::Query);
  if (cap < 1) throw std::invalid_argument("guo_index_block: cap must be positive");
  const Index n = E.rows();
  const Index m = E.cols();
  const Index count = n * m;
  if (mode == SearchMode::Exhaustive && count - 1 > 10)
    throw std::invalid_argument("guo_index_block: exhaustive mode requires n*m - 1 <= 10");

  std::vector<Complex> vals(static_cast<std::size_t>(count));
  for (Index t = 0; t < count; ++t) vals[static_cast<std::size_t>(t)] = E(t / m, t % m);

  const ComplexMatrix minv = m_transform_inverse(n).cast<Complex>();
  const ComplexMatrix fadj = dft_matrix(m).adjoint() / std::sqrt(static_cast<double>(m));
  // Rearrangements pair values only within k_pairing_tol, so the per-entry
  // residue guard scales with how many paired terms can accumulate.
  const double residue_tol = k_pairing_tol * static_cast<double>(2 * n + 2);

  struct Candidate {
    double phi = 0.0;
    Index binding_k = 0;
    Index binding_j = 0;
    std::vector<int> assignment;
    Provenance provenance = Provenance::General;
  };
  std::optional<Candidate> best;
  long long visited = 0;
  bool capped = false;

  auto evaluate = [&](const std::vector<int>& assignment, Provenance prov) -> bool {
    if (visited == cap) {
      capped = true;
      return false;
    }
    ++visited;
    ComplexMatrix Ef(n, m);
    for (Index t = 0; t < count; ++t)
      Ef(t / m, t % m) = vals[static_cast<std::size_t>(assignment[static_cast<std::size_t>(t)])];
    const ComplexMatrix gen = minv * Ef * fadj;
    const ThresholdScan scan = scan_threshold(Ef(0, 0).real(), gen, residue_tol);
    if (!best || scan.phi < best->phi ||
        (scan.phi == best->phi && assignment < best->assignment)) {
      best = Candidate{scan.phi, scan.k, scan.j, assignment, prov};
    }
    return true;
  };

  if (mode == SearchMode::Exhaustive) {
    // Destination slots, filled in a fixed order: the real first-column tail,
    // then each conjugate column pair as a unit, then the middle column when
    // m is even.  Candidate values are deduplicated per slot, and a chosen
    // value always consumes the smallest unused source index, so equal-valued
    // grids are visited once with their lexicographically least assignment.
    struct Step {
      Index dest;
      Index mirror;
      bool paired;
    };
    std::vector<Step> steps;
    for (Index i = 1; i < n; ++i) steps.push_back({flat(m, i, 0), -1, false});
    for (Index l = 1; 2 * l < m; ++l)
      for (Index r = 0; r < n; ++r) steps.push_back({flat(m, r, l), flat(m, r, m - l), true});
    if (m % 2 == 0)
      for (Index r = 0; r < n; ++r) steps.push_back({flat(m, r, m / 2), -1, false});

    std::vector<int> assignment(static_cast<std::size_t>(count), -1);
    assignment[0] = 0;
    std::vector<bool> used(static_cast<std::size_t>(count), false);
    used[0] = true;

    std::function<bool(std::size_t)> walk = [&](std::size_t depth) -> bool {
      if (depth == steps.size()) return evaluate(assignment, Provenance::General);
      const Step& step = steps[depth];
      std::vector<Complex> tried;
      for (int src = 0; src < count; ++src) {
        if (used[static_cast<std::size_t>(src)]) continue;
        const Complex v = vals[static_cast<std::size_t>(src)];
        if (!step.paired && !nearly_real(v)) continue;
        bool dup = false;
        for (const Complex& t : tried)
          if (t.real() == v.real() && t.imag() == v.imag()) {
            dup = true;
            break;
          }
        if (dup) continue;
        tried.push_back(v);
        used[static_cast<std::size_t>(src)] = true;
        assignment[static_cast<std::size_t>(step.dest)] = src;
        bool keep_going = true;
        if (!step.paired) {
          keep_going = walk(depth + 1);
        } else {
          const Complex want = std::conj(v);
          int partner = -1;
          for (int c = 0; c < count; ++c)
            if (!used[static_cast<std::size_t>(c)] &&
                std::abs(vals[static_cast<std::size_t>(c)] - want) <= k_pairing_tol) {
              partner = c;
              break;
            }
          if (partner >= 0) {
            used[static_cast<std::size_t>(partner)] = true;
            assignment[static_cast<std::size_t>(step.mirror)] = partner;
            keep_going = walk(depth + 1);
            assignment[static_cast<std::size_t>(step.mirror)] = -1;
            used[static_cast<std::size_t>(partner)] = false;
          }
        }
        assignment[static_cast<std::size_t>(step.dest)] = -1;
        used[static_cast<std::size_t>(src)] = false;
        if (!keep_going) return false;
      }
      return true;
    };
    walk(0);

    if (best) {
      if (best->assignment == identity_arrangement(E).assignment)
        best->provenance = Provenance::Identity;
      else if (best->assignment == column_swap_arrangement(E).assignment)
        best->provenance = Provenance::ColumnSwap;
      else if (best->assignment == global_conjugation_arrangement(E).assignment)
        best->provenance = Provenance::GlobalConjugation;
    }
  } else {
    // Closure of the four named families under composition (a small group of
    // pairing-preserving column permutations), crossed with independent
    // permutations of rows 1..n-1 per column group; conjugate column pairs
    // share one permutation so the pairing survives.
    std::vector<std::pair<std::vector<int>, Provenance>> bases;
    std::set<std::vector<int>> base_seen;
    auto add_base = [&](std::vector<int> a, Provenance p) {
      if (base_seen.insert(a).second) bases.emplace_back(std::move(a), p);
    };
    add_base(identity_arrangement(E).assignment, Provenance::Identity);
    add_base(column_swap_arrangement(E).assignment, Provenance::ColumnSwap);
    add_base(global_conjugation_arrangement(E).assignment, Provenance::GlobalConjugation);
    add_base(tail_conjugation_arrangement(E).assignment, Provenance::TailConjugation);
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t j = 0; j < bases.size(); ++j) {
        if (bases.size() > 256)
          throw std::logic_error("guo_index_block: arrangement closure overflow");
        std::vector<int> comp(static_cast<std::size_t>(count));
        for (Index t = 0; t < count; ++t)
          comp[static_cast<std::size_t>(t)] =
              bases[i].first[static_cast<std::size_t>(bases[j].first[static_cast<std::size_t>(t)])];
        add_base(std::move(comp), Provenance::General);
      }

    std::vector<int> group_of(static_cast<std::size_t>(m), 0);
    std::size_t group_count = 1;
    for (Index l = 1; 2 * l < m; ++l) {
      group_of[static_cast<std::size_t>(l)] = static_cast<int>(group_count);
      group_of[static_cast<std::size_t>(m - l)] = static_cast<int>(group_count);
      ++group_count;
    }
    if (m % 2 == 0) {
      group_of[static_cast<std::size_t>(m / 2)] = static_cast<int>(group_count);
      ++group_count;
    }

    std::vector<std::vector<int>> rowperm(group_count);
    std::set<std::vector<int>> emitted;
    bool stop = false;

    std::function<void(std::size_t)> spin = [&](std::size_t gi) {
      if (stop) return;
      if (gi == group_count) {
        std::vector<int> tails(static_cast<std::size_t>(count));
        for (Index r = 0; r < n; ++r)
          for (Index c = 0; c < m; ++c) {
            const Index source_row =
                r == 0 ? 0
                       : static_cast<Index>(
                             rowperm[static_cast<std::size_t>(group_of[static_cast<std::size_t>(c)])]
                                    [static_cast<std::size_t>(r - 1)]);
            tails[static_cast<std::size_t>(flat(m, r, c))] =
                static_cast<int>(flat(m, source_row, c));
          }
        bool tails_identity = true;
        for (const std::vector<int>& p : rowperm)
          for (std::size_t q = 0; q < p.size() && tails_identity; ++q)
            if (p[q] != static_cast<int>(q) + 1) tails_identity = false;
        for (const auto& [base, prov] : bases) {
          std::vector<int> candidate(static_cast<std::size_t>(count));
          for (Index t = 0; t < count; ++t)
            candidate[static_cast<std::size_t>(t)] =
                base[static_cast<std::size_t>(tails[static_cast<std::size_t>(t)])];
          if (!emitted.insert(candidate).second) continue;
          const Provenance label = tails_identity ? prov : Provenance::General;
          if (!evaluate(candidate, label)) {
            stop = true;
            return;
          }
        }
        return;
      }
      std::vector<int> p(static_cast<std::size_t>(n - 1));
      std::iota(p.begin(), p.end(), 1);
      do {
        rowperm[gi] = p;
        spin(gi + 1);
        if (stop) return;
      } while (std::next_permutation(p.begin(), p.end()));
    };
    spin(0);
  }

  if (!best) throw std::domain_error("guo_index_block: no admissible arrangement of the entries");

  // Independent re-verification of the winner: construct at the reported
  // minimum and check nonnegativity and the spectrum against the oracle.
  ComplexMatrix winner = apply_arrangement(E, Arrangement{best->assignment, best->provenance});
  winner(0, 0) = Complex(best->phi, 0.0);
  const BlockConstruction built = construct_block(winner);
  if (!built.feasible || !built.assembly)
    throw std::logic_error("guo_index_block: construction at the reported minimum failed");
  if (!is_nonnegative(*built.assembly).nonnegative)
    throw std::logic_error("guo_index_block: construction at the reported minimum is negative");
  ComplexVector claimed(count);
  for (Index t = 0; t < count; ++t) claimed(t) = winner(t / m, t % m);
  const VerificationReport check = verify_spectrum(materialize_real(*built.assembly), claimed, 1e-8);
  if (!check.pass)
    throw std::logic_error("guo_index_block: constructed matrix failed spectral verification");

  GuoReport report;
  report.phi = best->phi;
  report.binding_k = best->binding_k;
  report.binding_j = best->binding_j;
  report.arrangement = Arrangement{best->assignment, best->provenance};
  report.feasible_at = best->phi;
  report.mode = mode;
  report.visited = visited;
  report.upper_bound = capped || mode == SearchMode::Generators;
  report.dominance_ok = best->phi + k_pairing_tol >= max_other_modulus(winner);
  return report;
}

}  // namespace xniep
