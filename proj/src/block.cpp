#include "xniep/block.hpp"

#include "xniep/circulant.hpp"
#include "xniep/oracle.hpp"
#include "xniep/xlike.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xniep {

namespace {

void require_shape(const BlockAssembly& a, const char* who) {
  if (a.grid_order < 1 || a.block_order < 1)
    throw std::invalid_argument(std::string(who) + ": empty assembly");
  if (static_cast<Index>(a.rows.size()) != a.grid_order * a.grid_order)
    throw std::invalid_argument(std::string(who) + ": grid size mismatch");
  for (const ComplexVector& row : a.rows)
    if (row.size() != a.block_order)
      throw std::invalid_argument(std::string(who) + ": block row length mismatch");
}

bool rows_equal(const ComplexVector& a, const ComplexVector& b, double tol) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Greedy unit matching: every element of `row` pairs with a distinct element
// of `base` within tol in the sup norm.
bool is_permutation_of(const std::vector<ComplexVector>& row,
                       const std::vector<ComplexVector>& base, double tol) {
  std::vector<bool> used(base.size(), false);
  for (const ComplexVector& item : row) {
    bool matched = false;
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (used[j]) continue;
      if (rows_equal(item, base[j], tol)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

Index xlike_position_index(Index n, Index u, Index v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("xlike_position_index: cell out of range");
  if (u == 0) return v;
  if (v == 0) return u;
  if (v == u) return 0;
  return v;
}

BlockAssembly make_block_assembly(Index grid_order, Index block_order,
                                  std::vector<ComplexVector> rows, BlockPattern pattern) {
  BlockAssembly assembly;
  assembly.grid_order = grid_order;
  assembly.block_order = block_order;
  assembly.pattern = pattern;
  assembly.rows = std::move(rows);
  require_shape(assembly, "make_block_assembly");
  for (const ComplexVector& row : assembly.rows)
    for (Index k = 0; k < row.size(); ++k)
      if (!is_finite(row(k)))
        throw std::invalid_argument("make_block_assembly: nonfinite entry");

  if (pattern == BlockPattern::XLike) {
    // Cells sharing a pattern index must carry identical rows.
    for (Index u = 0; u < grid_order; ++u)
      for (Index v = 0; v < grid_order; ++v) {
        const Index t = xlike_position_index(grid_order, u, v);
        if (!rows_equal(assembly.row(u, v), assembly.row(0, t), 0.0))
          throw std::invalid_argument("make_block_assembly: grid does not follow the X pattern");
      }
  }
  return assembly;
}

BlockAssembly make_xlike_assembly(const std::vector<ComplexVector>& generators) {
  const Index n = static_cast<Index>(generators.size());
  if (n < 1) throw std::invalid_argument("make_xlike_assembly: no generators");
  const Index m = generators.front().size();
  std::vector<ComplexVector> rows(static_cast<std::size_t>(n * n));
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      rows[static_cast<std::size_t>(u * n + v)] =
          generators[static_cast<std::size_t>(xlike_position_index(n, u, v))];
  return make_block_assembly(n, m, std::move(rows), BlockPattern::XLike);
}

ComplexMatrix materialize(const BlockAssembly& assembly) {
  require_shape(assembly, "materialize");
  const Index n = assembly.grid_order;
  const Index m = assembly.block_order;
  ComplexMatrix A(n * m, n * m);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      A.block(u * m, v * m, m, m) = circulant<Complex>(assembly.row(u, v));
  return A;
}

RealMatrix materialize_real(const BlockAssembly& assembly, double imag_tol) {
  const ComplexMatrix A = materialize(assembly);
  if (A.imag().cwiseAbs().maxCoeff() >= imag_tol)
    throw std::invalid_argument("materialize_real: imaginary residue above tolerance");
  RealMatrix out = A.real();
  for (Index r = 0; r < out.rows(); ++r)
    for (Index c = 0; c < out.cols(); ++c)
      if (std::abs(out(r, c)) < k_nonneg_tol) out(r, c) = 0.0;
  return out;
}

SpectralFamily extract_spectral_family(const BlockAssembly& assembly) {
  require_shape(assembly, "extract_spectral_family");
  const Index n = assembly.grid_order;
  const Index m = assembly.block_order;
  std::vector<ComplexVector> eigs(static_cast<std::size_t>(n * n));
  for (std::size_t cell = 0; cell < eigs.size(); ++cell)
    eigs[cell] = circ_eigenvalues(assembly.rows[cell]);
  SpectralFamily family(static_cast<std::size_t>(m), ComplexMatrix(n, n));
  for (Index k = 0; k < m; ++k)
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v)
        family[static_cast<std::size_t>(k)](u, v) = eigs[static_cast<std::size_t>(u * n + v)](k);
  return family;
}

ComplexVector block_spectrum(const BlockAssembly& assembly) {
  require_shape(assembly, "block_spectrum");
  const Index n = assembly.grid_order;
  const Index m = assembly.block_order;
  ComplexVector out(n * m);
  if (n == 1) {
    out = circ_eigenvalues(assembly.rows.front());
    return out;
  }
  if (assembly.pattern == BlockPattern::XLike) {
    // S_k is X-patterned by the generator eigenvalues; spectrum is analytic.
    std::vector<ComplexVector> gen_eigs(static_cast<std::size_t>(n));
    for (Index t = 0; t < n; ++t) gen_eigs[static_cast<std::size_t>(t)] = circ_eigenvalues(assembly.row(0, t));
    for (Index k = 0; k < m; ++k) {
      ComplexVector slice(n);
      for (Index t = 0; t < n; ++t) slice(t) = gen_eigs[static_cast<std::size_t>(t)](k);
      out.segment(k * n, n) = spectrum_of_xlike<Complex>(slice);
    }
    return out;
  }
  if (n > 4)
    throw std::invalid_argument("block_spectrum: general pattern supported only for grid_order <= 4");
  const SpectralFamily family = extract_spectral_family(assembly);
  for (Index k = 0; k < m; ++k)
    out.segment(k * n, n) = small_matrix_eigenvalues(family[static_cast<std::size_t>(k)]);
  return out;
}

CoefficientFamily coefficients_from_spectral(const SpectralFamily& family) {
  const Index m = static_cast<Index>(family.size());
  if (m < 1) throw std::invalid_argument("coefficients_from_spectral: empty family");
  const Index n = family.front().rows();
  for (const ComplexMatrix& S : family)
    if (S.rows() != n || S.cols() != n)
      throw std::invalid_argument("coefficients_from_spectral: family shape mismatch");
  const ComplexVector w = omega_powers(m);
  CoefficientFamily coeffs(static_cast<std::size_t>(m));
  for (Index k = 0; k < m; ++k) {
    ComplexMatrix L = ComplexMatrix::Zero(n, n);
    for (Index l = 0; l < m; ++l)
      L += family[static_cast<std::size_t>(l)] * std::conj(w((k * l) % m));
    coeffs[static_cast<std::size_t>(k)] = L / static_cast<double>(m);
  }
  return coeffs;
}

BlockAssembly assemble_from_spectral(const SpectralFamily& family, BlockPattern pattern) {
  const CoefficientFamily coeffs = coefficients_from_spectral(family);
  const Index m = static_cast<Index>(coeffs.size());
  const Index n = coeffs.front().rows();
  std::vector<ComplexVector> rows(static_cast<std::size_t>(n * n), ComplexVector(m));
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (Index k = 0; k < m; ++k)
        rows[static_cast<std::size_t>(u * n + v)](k) = coeffs[static_cast<std::size_t>(k)](u, v);
  return make_block_assembly(n, m, std::move(rows), pattern);
}

NonnegativityReport is_nonnegative(const BlockAssembly& assembly) {
  require_shape(assembly, "is_nonnegative");
  NonnegativityReport report;
  report.min_entry = std::numeric_limits<double>::infinity();
  bool imag_clean = true;
  for (Index u = 0; u < assembly.grid_order; ++u)
    for (Index v = 0; v < assembly.grid_order; ++v) {
      const ComplexVector& row = assembly.row(u, v);
      for (Index k = 0; k < row.size(); ++k) {
        if (!nearly_real(row(k))) imag_clean = false;
        if (row(k).real() < report.min_entry) {
          report.min_entry = row(k).real();
          report.coeff_index = k;
          report.block_row = u;
          report.block_col = v;
        }
      }
    }
  report.nonnegative = imag_clean && report.min_entry >= -k_nonneg_tol;
  return report;
}

bool is_block_permutative(const BlockAssembly& assembly, double tol) {
  require_shape(assembly, "is_block_permutative");
  const Index n = assembly.grid_order;

  auto block_row = [&](Index u) {
    std::vector<ComplexVector> row;
    for (Index v = 0; v < n; ++v) row.push_back(assembly.row(u, v));
    return row;
  };
  const std::vector<ComplexVector> first = block_row(0);
  bool by_blocks = true;
  for (Index u = 1; u < n && by_blocks; ++u)
    by_blocks = is_permutation_of(block_row(u), first, tol);

  // Equivalent test on the spectral family: zip the S_k into per-cell tuples
  // and ask the same row-permutation question.
  const SpectralFamily family = extract_spectral_family(assembly);
  auto tuple_row = [&](Index u) {
    std::vector<ComplexVector> row;
    for (Index v = 0; v < n; ++v) {
      ComplexVector t(static_cast<Index>(family.size()));
      for (std::size_t k = 0; k < family.size(); ++k) t(static_cast<Index>(k)) = family[k](u, v);
      row.push_back(t);
    }
    return row;
  };
  const std::vector<ComplexVector> first_tuples = tuple_row(0);
  bool by_spectra = true;
  for (Index u = 1; u < n && by_spectra; ++u)
    by_spectra = is_permutation_of(tuple_row(u), first_tuples, tol * static_cast<double>(assembly.block_order));

  if (by_blocks != by_spectra)
    throw std::logic_error("is_block_permutative: block and spectral criteria disagree");
  return by_blocks;
}

}  // namespace xniep
