#include "doctest.h"
#include "helpers.hpp"
#include "xniep/guo.hpp"
#include "xniep/json_io.hpp"
#include "xniep/oracle.hpp"

#include <string>

using namespace xniep;
using testutil::cvec;
using testutil::max_abs_diff;
using testutil::rvec;

namespace {

ComplexMatrix e3() {
  ComplexMatrix E(2, 3);
  E << 4, 1, 1, -1, -2.5, -2.5;
  return E;
}

}  // namespace

TEST_CASE("format_number flushes dust and keeps ten significant digits") {
  CHECK(format_number(1e-13) == "0");
  CHECK(format_number(-1e-13) == "0");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(23.9) == "23.9");
  CHECK(format_number(14.0) == "14");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333");
  CHECK(format_number(-0.00125) == "-0.00125");
}

TEST_CASE("emitters print deterministic single-line documents") {
  CHECK(dump_real_array(rvec({1, 2.5, -3})) == "[1, 2.5, -3]");
  CHECK(dump_complex_array(cvec({{1, 1e-13}, {2, 0}})) == "[1, 2]");
  CHECK(dump_complex_array(cvec({{1, -7}, {0, 1e-13}})) == "[[1, -7], [0, 0]]");

  CHECK(dump_spectrum(cvec({{24, 0}, {8, 0}})) == "{\"entries\": [24, 8]}");
  CHECK(dump_xlike_vector(rvec({10, 2, 3})) == "{\"x\": [10, 2, 3]}");

  RealMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(dump_matrix(x) == "{\"order\": 2, \"rows\": [[0, 1], [1, 0]]}");

  CHECK(dump_circulant_row(cvec({{0, 0}, {0.75, 0}, {0.75, 0}})) ==
        "{\"a\": [0, 0.75, 0.75]}");

  CHECK(dump_eigenvalue_matrix(e3()) ==
        "{\"n\": 2, \"m\": 3, \"entries\": [[4, 1, 1], [-1, -2.5, -2.5]]}");
}

TEST_CASE("dump_guo_report uses a fixed key order") {
  const GuoReport r = guo_index_block(e3(), SearchMode::Exhaustive);
  CHECK(dump_guo_report(r) ==
        "{\"phi\": 4, \"binding\": [0, 0], \"arrangement\": {\"assignment\": "
        "[0, 1, 2, 3, 4, 5], \"provenance\": \"identity\"}, \"mode\": \"exhaustive\", "
        "\"visited\": 2, \"upper_bound\": false, \"feasible_at\": 4, \"dominance_ok\": true}");
}

TEST_CASE("dump_verification reports per-eigenvalue checks") {
  const RealMatrix eye = RealMatrix::Identity(2, 2);
  const VerificationReport r = verify_spectrum(eye, cvec({{1, 0}, {1, 0}}), 1e-8);
  REQUIRE(r.pass);
  const std::string text = dump_verification(r);
  CHECK(text.rfind("{\"pass\": true, \"moment_max_error\": ", 0) == 0);
  CHECK(text.find("\"value\": [1, 0]") != std::string::npos);
  CHECK(text.find("\"ok\": true") != std::string::npos);
  CHECK(text.find("\"ok\": false") == std::string::npos);
}

TEST_CASE("parsers accept plain numbers where the imaginary part is zero") {
  const ComplexVector v = parse_spectrum("{\"entries\": [24, [8, 0], [1, -7]]}");
  REQUIRE(v.size() == 3);
  CHECK(v(0) == Complex(24, 0));
  CHECK(v(1) == Complex(8, 0));
  CHECK(v(2) == Complex(1, -7));

  CHECK(max_abs_diff(parse_real_list("{\"entries\": [5, 6, 7, 8]}"), rvec({5, 6, 7, 8})) == 0.0);
  CHECK(max_abs_diff(parse_xlike_vector("{\"x\": [10, [2, 0], 3]}"), rvec({10, 2, 3})) == 0.0);
}

TEST_CASE("dump and parse roundtrip every document shape") {
  const ComplexVector spectrum = cvec({{23.9, 0}, {-3, 0.5}, {-3, -0.5}});
  CHECK(max_abs_diff(parse_spectrum(dump_spectrum(spectrum)), spectrum) == 0.0);

  ComplexMatrix m(2, 2);
  m << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-0.5, 0.25);
  CHECK(max_abs_diff(parse_square_matrix(dump_matrix(m)), m) == 0.0);

  RealMatrix x(2, 2);
  x << 0.25, 0.75, 0.75, 0.25;
  const ComplexMatrix back = parse_square_matrix(dump_matrix(x));
  CHECK(max_abs_diff(back, ComplexMatrix(x.cast<Complex>())) == 0.0);

  const ComplexVector a = cvec({{1.5, 0}, {2, 0}, {2.5, 0}, {2, 0}});
  CHECK(max_abs_diff(parse_circulant_row(dump_circulant_row(a)), a) == 0.0);

  ComplexMatrix e2(2, 4);
  e2 << Complex(2.5, 0), Complex(0, 0.25), Complex(0, 0), Complex(0, -0.25),
      Complex(-1, 0), Complex(0.5, -1), Complex(0, 0), Complex(0.5, 1);
  CHECK(max_abs_diff(parse_eigenvalue_matrix(dump_eigenvalue_matrix(e2)), e2) == 0.0);

  // Computed rows roundtrip to 10 significant digits, not bitwise.
  const BlockConstruction c = construct_block(e3());
  REQUIRE(c.feasible);
  const BlockAssembly again = parse_assembly(dump_assembly(*c.assembly));
  CHECK(again.pattern == BlockPattern::XLike);
  CHECK(again.grid_order == 2);
  CHECK(again.block_order == 3);
  for (Index u = 0; u < 2; ++u)
    for (Index v = 0; v < 2; ++v)
      CHECK(max_abs_diff(again.row(u, v), c.assembly->row(u, v)) < 1e-9);
}

TEST_CASE("syntax errors keep the parser position") {
  try {
    parse_spectrum("{\"entries\": [1,");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("structural errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_spectrum("{\"values\": [1]}"), doctest::Contains("missing \"entries\""),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_spectrum("[1, 2]"), doctest::Contains("expected a JSON object"),
                       ParseError);
  CHECK_THROWS_AS(parse_xlike_vector("{\"x\": [[1, 1]]}"), ParseError);
  CHECK_THROWS_AS(parse_spectrum("{\"entries\": [[1, 2, 3]]}"), ParseError);
  CHECK_THROWS_AS(parse_circulant_row("{\"a\": []}"), ParseError);

  CHECK_THROWS_AS(parse_square_matrix("{\"order\": 0, \"rows\": []}"), ParseError);
  CHECK_THROWS_AS(parse_square_matrix("{\"order\": 2.5, \"rows\": []}"), ParseError);
  CHECK_THROWS_AS(parse_square_matrix("{\"order\": 2, \"rows\": [[1, 2]]}"), ParseError);
  CHECK_THROWS_AS(parse_square_matrix("{\"order\": 2, \"rows\": [[1, 2], [3]]}"), ParseError);

  CHECK_THROWS_AS(
      parse_eigenvalue_matrix("{\"n\": 2, \"m\": 3, \"entries\": [[4, 1, 1], [-1, -2.5]]}"),
      ParseError);
}

TEST_CASE("assembly parsing validates pattern, keys, and completeness") {
  const std::string good =
      "{\"n\": 1, \"m\": 2, \"pattern\": \"general\", \"blocks\": {\"0,0\": [1, 2]}}";
  const BlockAssembly a = parse_assembly(good);
  CHECK(a.pattern == BlockPattern::General);
  CHECK(max_abs_diff(a.row(0, 0), cvec({{1, 0}, {2, 0}})) == 0.0);
  CHECK(dump_assembly(a) == good);

  CHECK_THROWS_WITH_AS(
      parse_assembly("{\"n\": 1, \"m\": 2, \"pattern\": \"diag\", \"blocks\": {\"0,0\": [1, 2]}}"),
      doctest::Contains("\"pattern\""), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_assembly("{\"n\": 1, \"m\": 2, \"pattern\": \"general\", \"blocks\": {\"1,0\": [1, 2]}}"),
      doctest::Contains("bad cell key"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_assembly("{\"n\": 1, \"m\": 2, \"pattern\": \"general\", \"blocks\": {}}"),
      doctest::Contains("missing cell"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_assembly("{\"n\": 1, \"m\": 2, \"pattern\": \"general\", "
                     "\"blocks\": {\"0,0\": [1, 2], \"00,0\": [3, 4]}}"),
      doctest::Contains("duplicate cell"), ParseError);
  CHECK_THROWS_AS(
      parse_assembly("{\"n\": 1, \"m\": 2, \"pattern\": \"general\", \"blocks\": {\"0,0\": [1]}}"),
      ParseError);
}

TEST_CASE("verify input accepts both spectrum forms and a positive tol") {
  const std::string matrix = "{\"order\": 2, \"rows\": [[0, 1], [1, 0]]}";

  const VerifyInput bare =
      parse_verify_input("{\"matrix\": " + matrix + ", \"spectrum\": [1, -1]}");
  CHECK(bare.tol == 1e-8);
  CHECK(max_abs_diff(bare.spectrum, cvec({{1, 0}, {-1, 0}})) == 0.0);
  CHECK(bare.matrix(0, 1) == Complex(1, 0));

  const VerifyInput wrapped = parse_verify_input(
      "{\"matrix\": " + matrix + ", \"spectrum\": {\"entries\": [1, -1]}, \"tol\": 1e-6}");
  CHECK(wrapped.tol == 1e-6);

  CHECK_THROWS_AS(parse_verify_input("{\"spectrum\": [1]}"), ParseError);
  CHECK_THROWS_AS(
      parse_verify_input("{\"matrix\": " + matrix + ", \"spectrum\": [1, -1], \"tol\": 0}"),
      ParseError);
  CHECK_THROWS_AS(
      parse_verify_input("{\"matrix\": " + matrix + ", \"spectrum\": [1, -1], \"tol\": \"x\"}"),
      ParseError);
}
