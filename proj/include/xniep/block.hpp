#pragma once

#include "xniep/types.hpp"

#include <vector>

namespace xniep {

/*
 * Square grids of circulant blocks, stored as defining rows only.  The two
 * index scales stay separate throughout: grid_order counts blocks per side,
 * block_order is the size of each circulant.  A grid placed in the X
 * pattern is generated by grid_order defining rows; the general pattern
 * stores one row per (u, v) cell.  Writing S_k for the matrix of k-th block
 * eigenvalues, the spectrum of the materialization is the union of the
 * spectra of S_0..S_{m-1}, and the inverse Fourier fold of the S family
 * recovers the per-coefficient slices L_k whose entries are the block row
 * coefficients.
 */

enum class BlockPattern { XLike, General };

struct BlockAssembly {
  Index grid_order = 0;   // n: blocks per side
  Index block_order = 0;  // m: size of each circulant block
  BlockPattern pattern = BlockPattern::General;
  std::vector<ComplexVector> rows;  // defining row of block (u, v) at u*grid_order + v

  const ComplexVector& row(Index u, Index v) const {
    return rows[static_cast<std::size_t>(u * grid_order + v)];
  }
};

// Index of the generator occupying cell (u, v) of the X pattern.
Index xlike_position_index(Index n, Index u, Index v);

// Builds and validates an assembly.  For the X pattern, every cell must
// carry exactly the row of its pattern generator.
BlockAssembly make_block_assembly(Index grid_order, Index block_order,
                                  std::vector<ComplexVector> rows, BlockPattern pattern);

// X-pattern assembly from its generator rows (generator t fills every cell
// with pattern index t).
BlockAssembly make_xlike_assembly(const std::vector<ComplexVector>& generators);

ComplexMatrix materialize(const BlockAssembly& assembly);

// Real materialization; imaginary dust must stay below imag_tol and
// magnitudes below 1e-12 clamp to zero.
RealMatrix materialize_real(const BlockAssembly& assembly, double imag_tol = k_pairing_tol);

using SpectralFamily = std::vector<ComplexMatrix>;     // S_0..S_{m-1}
using CoefficientFamily = std::vector<ComplexMatrix>;  // L_0..L_{m-1}

// S_k(u, v) = k-th eigenvalue of block (u, v).
SpectralFamily extract_spectral_family(const BlockAssembly& assembly);

// Union of the S_k spectra: analytic for X-pattern grids, characteristic
// polynomial roots (grid_order <= 4) otherwise.
ComplexVector block_spectrum(const BlockAssembly& assembly);

// L_k = (1/m) sum_l S_l omega^{-k l}; entry (u, v) of L_k is coefficient k
// of block (u, v).
CoefficientFamily coefficients_from_spectral(const SpectralFamily& family);

// Assembly whose block rows are read off the coefficient family.
BlockAssembly assemble_from_spectral(const SpectralFamily& family,
                                     BlockPattern pattern = BlockPattern::General);

struct NonnegativityReport {
  bool nonnegative = false;
  double min_entry = 0.0;
  Index coeff_index = 0;  // k within the defining row
  Index block_row = 0;    // u
  Index block_col = 0;    // v
};

// Entrywise check on the stored rows: real part >= -1e-12, imaginary dust
// below the pairing tolerance.  Reports the most negative entry.
NonnegativityReport is_nonnegative(const BlockAssembly& assembly);

// Every block row of the grid is a permutation of the first block row,
// blocks compared as units by their defining rows.  Cross-checked against
// the equivalent criterion on the spectral family.
bool is_block_permutative(const BlockAssembly& assembly, double tol = k_pairing_tol);

}  // namespace xniep
