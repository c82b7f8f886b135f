#pragma once

#include "xniep/block.hpp"
#include "xniep/types.hpp"

#include <optional>
#include <vector>

namespace xniep {

/*
 * Pipeline from an eigenvalue matrix E (n rows, m columns) to a nonnegative
 * block X-pattern matrix with circulant blocks.
 *
 * Column l of E feeds the X-pattern slice S_l = per_X(s(l)) with
 * s(l) = M^{-1} E q_l; the circulant coefficient blocks L_k follow by inverse
 * DFT across the slices.  Every L entry is affine in E(0,0) with slope
 * 1/(m*n), so nonnegativity of the whole construction is a single threshold
 * on E(0,0): the phi reported below.  Rearranging the entry multiset of E
 * (keeping E(0,0), a real first column, and conjugate column pairing) changes
 * the threshold; the class-level minimum over such arrangements is the
 * restricted Guo index computed by guo_index_block.
 */

// Strict additionally requires E(0,0) real, positive, and of maximal modulus.
// Query relaxes that for threshold searches where E(0,0) is the unknown.
enum class ValidationMode { Strict, Query };

enum class SearchMode { Exhaustive, Generators };

enum class Provenance { Identity, ColumnSwap, GlobalConjugation, TailConjugation, General };

// Slot-level rearrangement: destination slot t (row-major) takes the value of
// source slot assignment[t].  Representing arrangements as permutations of
// slots keeps the entry multiset exactly invariant.
struct Arrangement {
  std::vector<int> assignment;
  Provenance provenance = Provenance::Identity;
};

struct GuoReport {
  double phi = 0.0;
  Index binding_k = 0;  // coefficient index of the binding constraint
  Index binding_j = 0;  // generator row of the binding constraint
  Arrangement arrangement;
  double feasible_at = 0.0;  // least admissible E(0,0); equals phi
  SearchMode mode = SearchMode::Exhaustive;
  long long visited = 1;
  bool upper_bound = false;
  // Whether feasible_at dominates the moduli of the other entries.  Always
  // true for thresholds realized as Perron roots; reported, never enforced.
  bool dominance_ok = true;
};

struct BlockConstruction {
  bool feasible = false;
  std::optional<BlockAssembly> assembly;
  GuoReport threshold;
  RealMatrix generators;  // generators(j, k) = entry j of the defining row of L_k
  double min_entry = 0.0;
  Index violation_k = 0;
  Index violation_j = 0;
};

void require_valid(const ComplexMatrix& E, ValidationMode mode);

// Columns are the defining rows s(l) of the X-pattern slices: M^{-1} E.
ComplexMatrix spectral_generators(const ComplexMatrix& E);

// S_l = per_X(s(l)) for each column l of E.
SpectralFamily build_spectral_family(const ComplexMatrix& E);

// Single-product form of the coefficient generators: (1/sqrt(m)) M^{-1} E F*.
// Column k is the defining row of L_k.
ComplexMatrix fast_L_product(const ComplexMatrix& E);

// Least value of E(0,0) making every L_k entrywise nonnegative, with the
// lexicographically first (k, j) attaining it.
GuoReport phi_threshold(const ComplexMatrix& E);

// X-pattern assembly with the L generators as block rows, or the violation
// when E(0,0) falls short of the threshold.
BlockConstruction construct_block(const ComplexMatrix& E);

Arrangement identity_arrangement(const ComplexMatrix& E);
Arrangement column_swap_arrangement(const ComplexMatrix& E);
Arrangement global_conjugation_arrangement(const ComplexMatrix& E);
Arrangement tail_conjugation_arrangement(const ComplexMatrix& E);

ComplexMatrix apply_arrangement(const ComplexMatrix& E, const Arrangement& f);

// Whether E(f) keeps E(0,0) fixed and of maximal modulus, has a real first
// column realizable by a nonnegative X-pattern matrix, and pairs columns
// l and m-l by conjugation.
bool ennss_check(const ComplexMatrix& E, const Arrangement& f);

// Minimum of phi over admissible arrangements of the entry multiset.
// Exhaustive mode enumerates them all (requires n*m - 1 <= 10) and is exact
// unless the cap is hit; generators mode composes the four named families
// with per-column tail permutations and always reports an upper bound.
// The winning arrangement is re-verified by constructing at the minimum and
// checking nonnegativity and the spectrum against an independent oracle.
GuoReport guo_index_block(const ComplexMatrix& E, SearchMode mode, long long cap = 1'000'000);

}  // namespace xniep
