#include "CLI11.hpp"
#include "xniep/block.hpp"
#include "xniep/guo.hpp"
#include "xniep/json_io.hpp"
#include "xniep/oracle.hpp"
#include "xniep/xlike.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace xniep;

namespace {

struct Output {
  std::string path;  // empty means stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string entry_text(const Complex& z) {
  if (nearly_real(z)) return format_number(z.real());
  return format_number(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         format_number(std::abs(z.imag())) + "i";
}

std::string row_text(const RealVector& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += format_number(v(i));
  }
  return out;
}

std::string row_text(const ComplexVector& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += entry_text(v(i));
  }
  return out;
}

std::string matrix_lines(const RealMatrix& a) {
  std::string out;
  for (Index r = 0; r < a.rows(); ++r)
    out += "  " + row_text(RealVector(a.row(r).transpose())) + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string verification_lines(const VerificationReport& v) {
  std::string out = "verification: " + std::string(v.pass ? "pass" : "fail") +
                    " (moment max error " + format_number(v.moment_max_error) + ")\n";
  for (const EigenvalueCheck& c : v.detail)
    out += "  " + entry_text(c.value) + ": residual " + format_number(c.residual) +
           ", threshold " + format_number(c.threshold) + ", " + (c.ok ? "ok" : "FAIL") + "\n";
  return out;
}

ComplexVector flatten(const ComplexMatrix& e) {
  ComplexVector v(e.size());
  Index at = 0;
  for (Index i = 0; i < e.rows(); ++i)
    for (Index j = 0; j < e.cols(); ++j) v(at++) = e(i, j);
  return v;
}

std::string dump_generator_columns(const RealMatrix& generators) {
  std::string out = "[";
  for (Index k = 0; k < generators.cols(); ++k) {
    if (k) out += ", ";
    out += dump_real_array(RealVector(generators.col(k)));
  }
  return out + "]";
}

int run_realize(const std::string& text, double tol, bool table, const Output& out) {
  const RealVector list = parse_real_list(text);
  if (list.size() < 2) throw ParseError("\"entries\": need at least two eigenvalues");
  const XLikeFeasibility f = xlike_feasible(list);

  if (!f.feasible) {
    const RealVector x = xlike_from_list(list);
    if (table) {
      out.emit("feasible: no\nbinding value: " + format_number(f.binding_value) +
               "\nx: " + row_text(x));
    } else {
      out.emit("{\"x\": " + dump_real_array(x) +
               ", \"feasible\": false, \"binding_value\": " + format_number(f.binding_value) +
               "}");
    }
    return 1;
  }

  const RealVector x = *f.witness;
  const RealMatrix a = materialize_xlike(x);
  const ComplexVector claimed = list.cast<Complex>();
  const VerificationReport v = verify_spectrum(a, claimed, tol);
  if (table) {
    out.emit("feasible: yes\nx: " + row_text(x) + "\nmatrix:\n" + matrix_lines(a) +
             verification_lines(v) + "exit: " + (v.pass ? "0" : "1"));
  } else {
    out.emit("{\"x\": " + dump_real_array(x) +
             ", \"feasible\": true, \"binding_value\": " + format_number(f.binding_value) +
             ", \"matrix\": " + dump_matrix(a) +
             ", \"verification\": " + dump_verification(v) + "}");
  }
  return v.pass ? 0 : 1;
}

int run_guo_xlike(const std::string& text, bool table, const Output& out) {
  const RealVector tail = parse_real_list(text);
  const double star = guo_index_xlike(tail);
  const Index n = tail.size() + 1;
  const double bound = 2.0 * static_cast<double>(n) * tail.cwiseAbs().maxCoeff();

  const auto feasible = [&](double v) {
    RealVector list(n);
    list(0) = v;
    list.tail(tail.size()) = tail;
    return xlike_feasible(list).feasible;
  };
  const double lo = -tail.cwiseAbs().sum() - 1.0;
  const double check = brute_force_threshold(feasible, lo, bound + 1.0, 1e-11);

  const bool degenerate = bound == 0.0;
  if (table) {
    std::string lines = "index: " + format_number(star) + "\nbound: " + format_number(bound) +
                        "\ncross check: " + format_number(check);
    if (degenerate) lines += "\nnote: zero tail, the index and the trace bound both vanish";
    out.emit(lines);
  } else {
    std::string doc = "{\"index\": " + format_number(star) + ", \"bound\": " +
                      format_number(bound) + ", \"cross_check\": " + format_number(check);
    if (degenerate) doc += ", \"note\": \"zero tail, the index and the trace bound both vanish\"";
    out.emit(doc + "}");
  }
  return 0;
}

int run_build_block(const std::string& text, double tol, bool table, const Output& out) {
  const ComplexMatrix E = parse_eigenvalue_matrix(text);
  require_valid(E, ValidationMode::Query);
  const BlockConstruction c = construct_block(E);
  const double leading = E(0, 0).real();

  if (!c.feasible) {
    if (table) {
      std::string lines = "phi: " + format_number(c.threshold.phi) +
                          "\nleading: " + format_number(leading) + "\nfeasible: no\n";
      for (Index k = 0; k < c.generators.cols(); ++k)
        lines += "L" + std::to_string(k) + ": " + row_text(RealVector(c.generators.col(k))) + "\n";
      lines += "violation: coefficient " + std::to_string(c.violation_k) + ", row " +
               std::to_string(c.violation_j) + ", value " + format_number(c.min_entry);
      out.emit(lines);
    } else {
      out.emit("{\"phi\": " + format_number(c.threshold.phi) +
               ", \"leading\": " + format_number(leading) +
               ", \"feasible\": false, \"L\": " + dump_generator_columns(c.generators) +
               ", \"min_entry\": " + format_number(c.min_entry) +
               ", \"violation\": {\"k\": " + std::to_string(c.violation_k) +
               ", \"j\": " + std::to_string(c.violation_j) +
               ", \"value\": " + format_number(c.min_entry) + "}}");
    }
    return 1;
  }

  const RealMatrix a = materialize_real(*c.assembly);
  const VerificationReport v = verify_spectrum(a, flatten(E), tol);
  if (table) {
    std::string lines = "phi: " + format_number(c.threshold.phi) +
                        "\nleading: " + format_number(leading) + "\nfeasible: yes\n";
    for (Index k = 0; k < c.generators.cols(); ++k)
      lines += "L" + std::to_string(k) + ": " + row_text(RealVector(c.generators.col(k))) + "\n";
    lines += "min entry: " + format_number(c.min_entry) + "\nmatrix:\n" + matrix_lines(a) +
             verification_lines(v) + "exit: " + (v.pass ? "0" : "1");
    out.emit(lines);
  } else {
    out.emit("{\"phi\": " + format_number(c.threshold.phi) +
             ", \"leading\": " + format_number(leading) +
             ", \"feasible\": true, \"L\": " + dump_generator_columns(c.generators) +
             ", \"min_entry\": " + format_number(c.min_entry) +
             ", \"assembly\": " + dump_assembly(*c.assembly) +
             ", \"matrix\": " + dump_matrix(a) +
             ", \"verification\": " + dump_verification(v) + "}");
  }
  return v.pass ? 0 : 1;
}

int run_guo_block(const std::string& text, const std::string& mode_name, long long cap,
                  bool table, const Output& out) {
  const ComplexMatrix E = parse_eigenvalue_matrix(text);
  const SearchMode mode =
      mode_name == "generators" ? SearchMode::Generators : SearchMode::Exhaustive;
  const GuoReport r = guo_index_block(E, mode, cap);
  if (table) {
    std::string arrangement;
    for (std::size_t i = 0; i < r.arrangement.assignment.size(); ++i) {
      if (i) arrangement += " ";
      arrangement += std::to_string(r.arrangement.assignment[i]);
    }
    out.emit("phi: " + format_number(r.phi) + "\nbinding: coefficient " +
             std::to_string(r.binding_k) + ", row " + std::to_string(r.binding_j) +
             "\narrangement: " + arrangement + " (" +
             provenance_name(r.arrangement.provenance) + ")\nmode: " + search_mode_name(r.mode) +
             "\nvisited: " + std::to_string(r.visited) +
             "\nupper bound: " + yes_no(r.upper_bound) +
             "\nfeasible at: " + format_number(r.feasible_at) +
             "\ndominance: " + yes_no(r.dominance_ok));
  } else {
    out.emit(dump_guo_report(r));
  }
  return 0;
}

int run_verify(const std::string& text, std::optional<double> tol_override, bool table,
               const Output& out) {
  VerifyInput in = parse_verify_input(text);
  if (tol_override) in.tol = *tol_override;
  const VerificationReport r = verify_spectrum(in.matrix, in.spectrum, in.tol);
  out.emit(table ? verification_lines(r) + "exit: " + (r.pass ? "0" : "1")
                 : dump_verification(r));
  return r.pass ? 0 : 1;
}

// Reference grids from the worked 3x3 and 2x3 / 2x4 constructions.
ComplexMatrix grid_one() {
  ComplexMatrix E(3, 3);
  E << Complex(23.9, 0), Complex(0, 1), Complex(0, -1),
      Complex(-3, 0), Complex(1, -7), Complex(1, 7),
      Complex(0, 0), Complex(-3, 1), Complex(-3, -1);
  return E;
}

ComplexMatrix grid_two() {
  ComplexMatrix E(2, 4);
  E << 5, -3, -2, -3, 2, 1, 2, 1;
  return E;
}

ComplexMatrix grid_three() {
  ComplexMatrix E(2, 4);
  E << Complex(2.5, 0), Complex(0, 0.25), Complex(0, 0), Complex(0, -0.25),
      Complex(-1, 0), Complex(0.5, -1), Complex(0, 0), Complex(0.5, 1);
  return E;
}

ComplexMatrix grid_four() {
  ComplexMatrix E(2, 3);
  E << 4, 1, 1, -1, -2.5, -2.5;
  return E;
}

struct Check {
  std::string name;
  bool ok = false;
  std::string got;   // JSON fragment
  std::string want;  // JSON fragment
};

RealVector ref(std::initializer_list<double> values) {
  RealVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double value : values) v(i++) = value;
  return v;
}

Check vec_check(const std::string& name, const RealVector& got, const RealVector& want,
                double tol) {
  Check c;
  c.name = name;
  c.ok = got.size() == want.size() && (got - want).cwiseAbs().maxCoeff() <= tol;
  c.got = dump_real_array(got);
  c.want = dump_real_array(want);
  return c;
}

Check val_check(const std::string& name, bool ok, double got, double want) {
  return {name, ok, format_number(got), format_number(want)};
}

int run_paper_example(int id, bool table, const Output& out) {
  std::vector<Check> checks;
  std::vector<std::string> errata;
  std::optional<VerificationReport> verification;

  if (id == 1) {
    const ComplexMatrix E = grid_one();
    const ComplexMatrix gen = spectral_generators(E);
    checks.push_back(vec_check("x", gen.col(0).real(), ref({6.9667, 9.9667, 6.9667}), 1e-3));
    const BlockConstruction c = construct_block(E);
    checks.push_back(vec_check("L0", c.generators.col(0), ref({1.8778, 2.2111, 3.8778}), 1e-3));
    checks.push_back(vec_check("L1", c.generators.col(1), ref({1.5822, 6.9570, 0.0048}), 1e-3));
    checks.push_back(vec_check("L2", c.generators.col(2), ref({3.5067, 0.7986, 3.0840}), 1e-3));
    checks.push_back(
        vec_check("A0", c.assembly->row(0, 0).real(), ref({1.8778, 1.5822, 3.5067}), 1e-3));
    checks.push_back(
        vec_check("A1", c.assembly->row(0, 1).real(), ref({2.2111, 6.9570, 0.7986}), 1e-3));
    checks.push_back(
        vec_check("A2", c.assembly->row(0, 2).real(), ref({3.8778, 0.0048, 3.0840}), 1e-3));
    verification = verify_spectrum(materialize_real(*c.assembly), flatten(E), 1e-8);
    errata.push_back(
        "reference prints the last component of L1 and the middle component of A2 as "
        "\"0,0048\", read here as 0.0048");
  } else if (id == 2) {
    const ComplexMatrix E = grid_two();
    const ComplexMatrix gen = spectral_generators(E);
    checks.push_back(vec_check("x", gen.col(0).real(), ref({3.5, 1.5}), 1e-9));
    checks.push_back(
        val_check("phi", std::abs(phi_threshold(E).phi - 14) <= 1e-9, phi_threshold(E).phi, 14));
    const BlockConstruction at5 = construct_block(E);
    checks.push_back(val_check("infeasible_at_5",
                               !at5.feasible && std::abs(at5.min_entry + 1.125) <= 1e-9,
                               at5.min_entry, -1.125));
    errata.push_back(
        "reference prints a leading entry of 5, but the blocks it prints correspond to the "
        "least feasible leading entry 14; at 5 the binding block entry is -1.125");
    ComplexMatrix lifted = E;
    lifted(0, 0) = Complex(14, 0);
    const BlockConstruction c = construct_block(lifted);
    checks.push_back(vec_check("L0", c.generators.col(0), ref({1.5, 0}), 1e-9));
    checks.push_back(vec_check("L1", c.generators.col(1), ref({2, 2}), 1e-9));
    checks.push_back(vec_check("L2", c.generators.col(2), ref({2.5, 2}), 1e-9));
    checks.push_back(vec_check("L3", c.generators.col(3), ref({2, 2}), 1e-9));
    checks.push_back(vec_check("A0", c.assembly->row(0, 0).real(), ref({1.5, 2, 2.5, 2}), 1e-9));
    checks.push_back(vec_check("A1", c.assembly->row(0, 1).real(), ref({0, 2, 2, 2}), 1e-9));
    verification = verify_spectrum(materialize_real(*c.assembly), flatten(lifted), 1e-8);
  } else if (id == 3) {
    const ComplexMatrix E = grid_three();
    checks.push_back(
        val_check("phi", std::abs(phi_threshold(E).phi - 2.5) <= 1e-9, phi_threshold(E).phi, 2.5));
    const BlockConstruction c = construct_block(E);
    checks.push_back(vec_check("L1", c.generators.col(1), ref({0, 0.75}), 1e-9));
    checks.push_back(vec_check("L3", c.generators.col(3), ref({0.375, 0.125}), 1e-9));
    checks.push_back(vec_check("L0", c.generators.col(0), ref({0.3125, 0.3125}), 1e-9));
    checks.push_back(vec_check("L2", c.generators.col(2), ref({0.0625, 0.5625}), 1e-9));
    errata.push_back(
        "reference prints L0 = per_X(0.25, 0.375); the transform gives per_X(0.3125, 0.3125)");
    errata.push_back(
        "reference prints L2 = per_X(0.125, 0.5); the transform gives per_X(0.0625, 0.5625)");
    verification = verify_spectrum(materialize_real(*c.assembly), flatten(E), 1e-8);
    ComplexMatrix shy = E;
    shy(0, 0) = Complex(2.49, 0);
    const BlockConstruction below = construct_block(shy);
    checks.push_back(val_check("infeasible_at_2.49",
                               !below.feasible && std::abs(below.min_entry + 0.0012) <= 1e-4,
                               below.min_entry, -0.0012));
    checks.push_back(
        vec_check("L1_at_2.49", below.generators.col(1), ref({-0.0012, 0.7488}), 1e-4));
  } else {
    const ComplexMatrix E = grid_four();
    const BlockConstruction c = construct_block(E);
    checks.push_back(vec_check("L0", c.generators.col(0), ref({0, 2}), 1e-9));
    checks.push_back(vec_check("L1", c.generators.col(1), ref({0.75, 0.25}), 1e-9));
    checks.push_back(vec_check("L2", c.generators.col(2), ref({0.75, 0.25}), 1e-9));
    checks.push_back(vec_check("A0", c.assembly->row(0, 0).real(), ref({0, 0.75, 0.75}), 1e-9));
    checks.push_back(vec_check("A1", c.assembly->row(0, 1).real(), ref({2, 0.25, 0.25}), 1e-9));
    verification = verify_spectrum(materialize_real(*c.assembly), flatten(E), 1e-8);
    const GuoReport r = guo_index_block(E, SearchMode::Exhaustive);
    checks.push_back(val_check("guo_index", std::abs(r.phi - 4) <= 1e-9, r.phi, 4));
  }

  bool pass = verification.has_value() && verification->pass;
  for (const Check& c : checks) pass = pass && c.ok;

  if (table) {
    std::string lines = "id: " + std::to_string(id) + "\n";
    for (const Check& c : checks)
      lines += "check " + c.name + ": " + (c.ok ? "ok" : "FAIL") + " (got " + c.got + ", want " +
               c.want + ")\n";
    for (const std::string& note : errata) lines += "erratum: " + note + "\n";
    lines += verification_lines(*verification);
    lines += "result: " + std::string(pass ? "pass" : "fail");
    out.emit(lines);
  } else {
    std::string doc = "{\"id\": " + std::to_string(id) + ", \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const Check& c = checks[i];
      if (i) doc += ", ";
      doc += "{\"name\": \"" + c.name + "\", \"ok\": " + (c.ok ? "true" : "false") +
             ", \"got\": " + c.got + ", \"want\": " + c.want + "}";
    }
    doc += "], \"errata\": [";
    for (std::size_t i = 0; i < errata.size(); ++i) {
      if (i) doc += ", ";
      doc += "\"" + errata[i] + "\"";
    }
    doc += "], \"verification\": " + dump_verification(*verification) +
           ", \"pass\": " + (pass ? "true" : "false") + "}";
    out.emit(doc);
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse eigenvalue toolkit for X-pattern and block circulant matrices"};
  app.require_subcommand(1);

  std::string input, output;
  std::string mode = "exhaustive";
  std::string format = "json";
  long long cap = 1'000'000;
  double tol = 1e-8;
  int id = 1;

  const auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("--input,-i", input, "input JSON file")->required();
    cmd->add_option("--output,-o", output, "write the report here instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* realize = app.add_subcommand(
      "realize-xlike", "realize a real eigenvalue list as a nonnegative X-pattern matrix");
  add_common(realize, true);
  realize->add_option("--tol", tol, "verification tolerance")->check(CLI::PositiveNumber);

  CLI::App* guo_xlike = app.add_subcommand(
      "guo-xlike", "least admissible Perron root for a real tail under the X pattern");
  add_common(guo_xlike, true);

  CLI::App* build = app.add_subcommand(
      "build-block", "build the block circulant realization of an eigenvalue grid");
  add_common(build, true);
  build->add_option("--tol", tol, "verification tolerance")->check(CLI::PositiveNumber);

  CLI::App* guo_block = app.add_subcommand(
      "guo-block", "class-restricted Guo index over admissible rearrangements of a grid");
  add_common(guo_block, true);
  guo_block->add_option("--mode", mode, "search mode")
      ->check(CLI::IsMember({"exhaustive", "generators"}));
  guo_block->add_option("--cap", cap, "exhaustive search budget")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a claimed spectrum against a matrix with the moment and determinant oracle");
  add_common(verify, true);
  CLI::Option* verify_tol =
      verify->add_option("--tol", tol, "verification tolerance")->check(CLI::PositiveNumber);

  CLI::App* examples = app.add_subcommand(
      "paper-examples", "reproduce the four worked constructions and report errata");
  add_common(examples, false);
  examples->add_option("--id", id, "example number")->required()->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool table = format == "table";
  const Output out{output};
  try {
    if (app.got_subcommand(realize)) return run_realize(read_file(input), tol, table, out);
    if (app.got_subcommand(guo_xlike)) return run_guo_xlike(read_file(input), table, out);
    if (app.got_subcommand(build)) return run_build_block(read_file(input), tol, table, out);
    if (app.got_subcommand(guo_block))
      return run_guo_block(read_file(input), mode, cap, table, out);
    if (app.got_subcommand(verify)) {
      std::optional<double> tol_override;
      if (verify_tol->count() > 0) tol_override = tol;
      return run_verify(read_file(input), tol_override, table, out);
    }
    return run_paper_example(id, table, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
