#pragma once

#include "xniep/block.hpp"
#include "xniep/guo.hpp"
#include "xniep/oracle.hpp"
#include "xniep/types.hpp"

#include <stdexcept>
#include <string>

namespace xniep {

/*
 * JSON surface of the library.  Parsers accept a plain number wherever a
 * complex entry is expected (zero imaginary part); emitters print a complex
 * array as plain numbers when every imaginary part stays below the pairing
 * tolerance and as [re, im] pairs otherwise.  All output is deterministic:
 * fixed key order, 10 significant digits, magnitudes below 1e-12 print as 0.
 */

// Structural problems in otherwise well-formed JSON and syntax errors alike;
// syntax messages keep the parser's line/column position.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_number(double v);

std::string dump_real_array(const RealVector& v);
std::string dump_complex_array(const ComplexVector& v);

std::string dump_spectrum(const ComplexVector& entries);       // {"entries": [...]}
std::string dump_xlike_vector(const RealVector& x);            // {"x": [...]}
std::string dump_matrix(const RealMatrix& a);                  // {"order": n, "rows": [...]}
std::string dump_matrix(const ComplexMatrix& a);
std::string dump_circulant_row(const ComplexVector& a);        // {"a": [...]}
std::string dump_eigenvalue_matrix(const ComplexMatrix& e);    // {"n", "m", "entries"}
std::string dump_assembly(const BlockAssembly& assembly);      // {"n", "m", "pattern", "blocks"}
std::string dump_guo_report(const GuoReport& report);
std::string dump_verification(const VerificationReport& report);

std::string provenance_name(Provenance p);
std::string search_mode_name(SearchMode m);
std::string pattern_name(BlockPattern p);

RealVector parse_real_list(const std::string& text);            // {"entries": [...]}
ComplexVector parse_spectrum(const std::string& text);          // {"entries": [...]}
RealVector parse_xlike_vector(const std::string& text);         // {"x": [...]}
ComplexMatrix parse_square_matrix(const std::string& text);     // {"order", "rows"}
ComplexVector parse_circulant_row(const std::string& text);     // {"a": [...]}
ComplexMatrix parse_eigenvalue_matrix(const std::string& text); // {"n", "m", "entries"}
BlockAssembly parse_assembly(const std::string& text);          // {"n", "m", "pattern", "blocks"}

struct VerifyInput {
  ComplexMatrix matrix;
  ComplexVector spectrum;
  double tol = 1e-8;
};

// {"matrix": {...}, "spectrum": {"entries": [...]} or bare array, "tol"?}
VerifyInput parse_verify_input(const std::string& text);

}  // namespace xniep
