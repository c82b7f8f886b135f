#include "xniep/json_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace xniep {

namespace {

using nlohmann::json;

std::string bool_name(bool b) { return b ? "true" : "false"; }

bool all_nearly_real(const ComplexVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!nearly_real(v(i))) return false;
  return true;
}

std::string pair_fragment(const Complex& z) {
  return "[" + format_number(z.real()) + ", " + format_number(z.imag()) + "]";
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing \"") + key + "\"");
  return *it;
}

double number_in(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

Index order_in(const json& obj, const char* key) {
  const json& v = member(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(std::string("\"") + key + "\": expected a positive integer");
  return static_cast<Index>(v.get<long long>());
}

Complex complex_in(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw ParseError(where + ": expected a number or an [re, im] pair");
}

double real_in(const json& v, const std::string& where) {
  const Complex z = complex_in(v, where);
  if (!nearly_real(z)) throw ParseError(where + ": entry must be real");
  return z.real();
}

ComplexVector complex_array_in(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  ComplexVector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Index>(i)) = complex_in(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

RealVector real_array_in(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  RealVector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Index>(i)) = real_in(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

ComplexMatrix square_matrix_in(const json& obj) {
  const Index order = order_in(obj, "order");
  const json& rows = member(obj, "rows");
  if (!rows.is_array() || static_cast<Index>(rows.size()) != order)
    throw ParseError("\"rows\": expected " + std::to_string(order) + " rows");
  ComplexMatrix a(order, order);
  for (Index r = 0; r < order; ++r) {
    const std::string where = "rows[" + std::to_string(r) + "]";
    const ComplexVector row = complex_array_in(rows[static_cast<std::size_t>(r)], where);
    if (row.size() != order)
      throw ParseError(where + ": expected " + std::to_string(order) + " entries");
    a.row(r) = row.transpose();
  }
  return a;
}

bool parse_cell_key(const std::string& key, Index n, Index& u, Index& v) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    u = static_cast<Index>(std::stoll(key.substr(0, comma), &used));
    if (used != comma) return false;
    const std::string rest = key.substr(comma + 1);
    v = static_cast<Index>(std::stoll(rest, &used));
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return u >= 0 && u < n && v >= 0 && v < n;
}

}  // namespace

std::string format_number(double v) {
  if (std::abs(v) < k_nonneg_tol) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::string(buf);
}

std::string dump_real_array(const RealVector& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v(i));
  }
  return out + "]";
}

std::string dump_complex_array(const ComplexVector& v) {
  const bool real_only = all_nearly_real(v);
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += real_only ? format_number(v(i).real()) : pair_fragment(v(i));
  }
  return out + "]";
}

std::string dump_spectrum(const ComplexVector& entries) {
  return "{\"entries\": " + dump_complex_array(entries) + "}";
}

std::string dump_xlike_vector(const RealVector& x) {
  return "{\"x\": " + dump_real_array(x) + "}";
}

std::string dump_matrix(const RealMatrix& a) {
  std::string out = "{\"order\": " + std::to_string(a.rows()) + ", \"rows\": [";
  for (Index r = 0; r < a.rows(); ++r) {
    if (r) out += ", ";
    out += dump_real_array(a.row(r).transpose());
  }
  return out + "]}";
}

std::string dump_matrix(const ComplexMatrix& a) {
  std::string out = "{\"order\": " + std::to_string(a.rows()) + ", \"rows\": [";
  for (Index r = 0; r < a.rows(); ++r) {
    if (r) out += ", ";
    out += dump_complex_array(a.row(r).transpose());
  }
  return out + "]}";
}

std::string dump_circulant_row(const ComplexVector& a) {
  return "{\"a\": " + dump_complex_array(a) + "}";
}

std::string dump_eigenvalue_matrix(const ComplexMatrix& e) {
  std::string out = "{\"n\": " + std::to_string(e.rows()) + ", \"m\": " +
                    std::to_string(e.cols()) + ", \"entries\": [";
  for (Index r = 0; r < e.rows(); ++r) {
    if (r) out += ", ";
    out += dump_complex_array(e.row(r).transpose());
  }
  return out + "]}";
}

std::string dump_assembly(const BlockAssembly& assembly) {
  const Index n = assembly.grid_order;
  std::string out = "{\"n\": " + std::to_string(n) + ", \"m\": " +
                    std::to_string(assembly.block_order) + ", \"pattern\": \"" +
                    pattern_name(assembly.pattern) + "\", \"blocks\": {";
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      if (u || v) out += ", ";
      out += "\"" + std::to_string(u) + "," + std::to_string(v) +
             "\": " + dump_complex_array(assembly.row(u, v));
    }
  return out + "}}";
}

std::string dump_guo_report(const GuoReport& report) {
  std::string assignment = "[";
  for (std::size_t i = 0; i < report.arrangement.assignment.size(); ++i) {
    if (i) assignment += ", ";
    assignment += std::to_string(report.arrangement.assignment[i]);
  }
  assignment += "]";
  return "{\"phi\": " + format_number(report.phi) + ", \"binding\": [" +
         std::to_string(report.binding_k) + ", " + std::to_string(report.binding_j) +
         "], \"arrangement\": {\"assignment\": " + assignment + ", \"provenance\": \"" +
         provenance_name(report.arrangement.provenance) + "\"}, \"mode\": \"" +
         search_mode_name(report.mode) + "\", \"visited\": " + std::to_string(report.visited) +
         ", \"upper_bound\": " + bool_name(report.upper_bound) +
         ", \"feasible_at\": " + format_number(report.feasible_at) +
         ", \"dominance_ok\": " + bool_name(report.dominance_ok) + "}";
}

std::string dump_verification(const VerificationReport& report) {
  std::string out = "{\"pass\": " + bool_name(report.pass) +
                    ", \"moment_max_error\": " + format_number(report.moment_max_error) +
                    ", \"checks\": [";
  for (std::size_t i = 0; i < report.detail.size(); ++i) {
    const EigenvalueCheck& c = report.detail[i];
    if (i) out += ", ";
    out += "{\"value\": " + pair_fragment(c.value) +
           ", \"residual\": " + format_number(c.residual) +
           ", \"threshold\": " + format_number(c.threshold) +
           ", \"ok\": " + bool_name(c.ok) + "}";
  }
  return out + "]}";
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Identity: return "identity";
    case Provenance::ColumnSwap: return "column-swap";
    case Provenance::GlobalConjugation: return "global-conjugation";
    case Provenance::TailConjugation: return "tail-conjugation";
    case Provenance::General: return "general";
  }
  return "general";
}

std::string search_mode_name(SearchMode m) {
  return m == SearchMode::Exhaustive ? "exhaustive" : "generators";
}

std::string pattern_name(BlockPattern p) {
  return p == BlockPattern::XLike ? "xlike" : "general";
}

RealVector parse_real_list(const std::string& text) {
  const json root = parse_root(text);
  return real_array_in(member(root, "entries"), "\"entries\"");
}

ComplexVector parse_spectrum(const std::string& text) {
  const json root = parse_root(text);
  return complex_array_in(member(root, "entries"), "\"entries\"");
}

RealVector parse_xlike_vector(const std::string& text) {
  const json root = parse_root(text);
  return real_array_in(member(root, "x"), "\"x\"");
}

ComplexMatrix parse_square_matrix(const std::string& text) {
  return square_matrix_in(parse_root(text));
}

ComplexVector parse_circulant_row(const std::string& text) {
  const json root = parse_root(text);
  const ComplexVector a = complex_array_in(member(root, "a"), "\"a\"");
  if (a.size() == 0) throw ParseError("\"a\": expected a nonempty array");
  return a;
}

ComplexMatrix parse_eigenvalue_matrix(const std::string& text) {
  const json root = parse_root(text);
  const Index n = order_in(root, "n");
  const Index m = order_in(root, "m");
  const json& entries = member(root, "entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != n)
    throw ParseError("\"entries\": expected " + std::to_string(n) + " rows");
  ComplexMatrix e(n, m);
  for (Index r = 0; r < n; ++r) {
    const std::string where = "entries[" + std::to_string(r) + "]";
    const ComplexVector row = complex_array_in(entries[static_cast<std::size_t>(r)], where);
    if (row.size() != m)
      throw ParseError(where + ": expected " + std::to_string(m) + " entries");
    e.row(r) = row.transpose();
  }
  return e;
}

BlockAssembly parse_assembly(const std::string& text) {
  const json root = parse_root(text);
  const Index n = order_in(root, "n");
  const Index m = order_in(root, "m");
  const json& pattern_tag = member(root, "pattern");
  if (!pattern_tag.is_string())
    throw ParseError("\"pattern\": expected \"xlike\" or \"general\"");
  const std::string tag = pattern_tag.get<std::string>();
  BlockPattern pattern;
  if (tag == "xlike") pattern = BlockPattern::XLike;
  else if (tag == "general") pattern = BlockPattern::General;
  else throw ParseError("\"pattern\": expected \"xlike\" or \"general\"");

  const json& blocks = member(root, "blocks");
  if (!blocks.is_object()) throw ParseError("\"blocks\": expected an object");
  std::vector<ComplexVector> rows(static_cast<std::size_t>(n * n));
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  for (const auto& [key, value] : blocks.items()) {
    Index u = 0, v = 0;
    if (!parse_cell_key(key, n, u, v))
      throw ParseError("\"blocks\": bad cell key \"" + key + "\" (want \"u,v\" with 0 <= u,v < " +
                       std::to_string(n) + ")");
    const std::size_t at = static_cast<std::size_t>(u * n + v);
    if (seen[at]) throw ParseError("\"blocks\": duplicate cell \"" + key + "\"");
    const std::string where = "blocks[\"" + key + "\"]";
    rows[at] = complex_array_in(value, where);
    if (rows[at].size() != m)
      throw ParseError(where + ": expected " + std::to_string(m) + " entries");
    seen[at] = true;
  }
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (!seen[static_cast<std::size_t>(u * n + v)])
        throw ParseError("\"blocks\": missing cell \"" + std::to_string(u) + "," +
                         std::to_string(v) + "\"");
  return make_block_assembly(n, m, std::move(rows), pattern);
}

VerifyInput parse_verify_input(const std::string& text) {
  const json root = parse_root(text);
  VerifyInput in;
  in.matrix = square_matrix_in(member(root, "matrix"));
  const json& spectrum = member(root, "spectrum");
  if (spectrum.is_array()) in.spectrum = complex_array_in(spectrum, "\"spectrum\"");
  else in.spectrum = complex_array_in(member(spectrum, "entries"), "\"spectrum.entries\"");
  if (root.contains("tol")) {
    in.tol = number_in(root["tol"], "\"tol\"");
    if (!(in.tol > 0)) throw ParseError("\"tol\": expected a positive number");
  }
  return in;
}

}  // namespace xniep
