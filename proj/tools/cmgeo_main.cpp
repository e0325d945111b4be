// cmgeo command-line front end. Exact values are printed as "p/q" strings,
// floating values with 12 significant digits; identical invocations produce
// byte-identical output.

#include "cmgeo/cross_polytope.hpp"
#include "cmgeo/distance_core.hpp"
#include "cmgeo/mapping.hpp"
#include "cmgeo/rational.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using cmgeo::Rational;
using ordered_json = nlohmann::ordered_json;

struct CommandResult {
  ordered_json report;
  bool ok = true;  // verdict-level outcome, consumed by --strict
};

Rational parse_flag_rational(const std::string& text, const std::string& flag) {
  try {
    return cmgeo::parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(flag + ": not a rational: '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

std::vector<Rational> parse_rational_grid(const std::string& text, const std::string& flag) {
  std::vector<Rational> values;
  for (const std::string& part : split(text, ',')) {
    values.push_back(parse_flag_rational(part, flag));
  }
  if (values.empty()) throw std::invalid_argument(flag + ": empty grid");
  return values;
}

// Accepts "4", "2,3,7" or "2..8".
std::vector<std::size_t> parse_n_values(const std::string& text) {
  std::vector<std::size_t> values;
  const std::size_t range = text.find("..");
  if (range != std::string::npos) {
    const Rational lo = parse_flag_rational(text.substr(0, range), "--n");
    const Rational hi = parse_flag_rational(text.substr(range + 2), "--n");
    if (denominator(lo) != 1 || denominator(hi) != 1 || lo < 2 || hi < lo) {
      throw std::invalid_argument("--n: bad range '" + text + "'");
    }
    for (cmgeo::BigInt v = numerator(lo); v <= numerator(hi); ++v) {
      values.push_back(v.convert_to<std::size_t>());
    }
    return values;
  }
  for (const std::string& part : split(text, ',')) {
    const Rational v = parse_flag_rational(part, "--n");
    if (denominator(v) != 1 || v < 2) {
      throw std::invalid_argument("--n: values must be integers >= 2");
    }
    values.push_back(numerator(v).convert_to<std::size_t>());
  }
  if (values.empty()) throw std::invalid_argument("--n: empty range");
  return values;
}

std::size_t entry_row(std::size_t flat, std::size_t points) { return flat / points; }
std::size_t entry_col(std::size_t flat, std::size_t points) { return flat % points; }

cmgeo::SquaredDistanceMatrix read_matrix_document(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("squared_distances")) {
    throw std::invalid_argument("document needs fields 'points' and 'squared_distances'");
  }
  if (!doc["points"].is_number_integer() && !doc["points"].is_number_unsigned()) {
    throw std::invalid_argument("'points' must be an integer");
  }
  const long long points_signed = doc["points"].get<long long>();
  if (points_signed < 1) throw std::invalid_argument("'points' must be >= 1");
  const auto points = static_cast<std::size_t>(points_signed);
  const auto& flat = doc["squared_distances"];
  if (!flat.is_array() || flat.size() != points * points) {
    throw std::invalid_argument("'squared_distances' must hold " +
                                std::to_string(points * points) + " row-major entries");
  }
  cmgeo::RationalMatrix m(points, points);
  for (std::size_t idx = 0; idx < flat.size(); ++idx) {
    const auto& cell = flat[idx];
    const std::size_t i = entry_row(idx, points);
    const std::size_t j = entry_col(idx, points);
    const std::string name =
        "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (cell.is_number_integer() || cell.is_number_unsigned()) {
      m(i, j) = Rational(cell.get<long long>());
    } else if (cell.is_string()) {
      try {
        m(i, j) = cmgeo::parse_rational(cell.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument(name + " is not a rational: '" +
                                    cell.get<std::string>() + "'");
      }
    } else {
      throw std::invalid_argument(name + " must be an integer or a \"p/q\" string");
    }
  }
  return cmgeo::SquaredDistanceMatrix(std::move(m));
}

cmgeo::SquaredDistanceMatrix read_matrix_document(const std::string& path) {
  if (path == "-") return read_matrix_document(std::cin);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  return read_matrix_document(file);
}

std::string verdict_token(cmgeo::Flatness kind) {
  switch (kind) {
    case cmgeo::Flatness::flat: return "flat";
    case cmgeo::Flatness::full_dimensional: return "full_dimensional";
    case cmgeo::Flatness::not_realizable: return "not_realizable";
  }
  return "not_realizable";
}

const char* pass_token(bool ok) { return ok ? "pass" : "fail"; }

ordered_json dimension_field(const std::optional<std::size_t>& dimension) {
  if (!dimension) return nullptr;
  return *dimension;
}

std::string text_scalar(const ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_null()) return "-";
  return value.dump();
}

void emit(const ordered_json& report, const std::string& format) {
  if (format == "structured") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      for (const auto& cell : value) {
        std::string line;
        for (const auto& [ck, cv] : cell.items()) {
          if (!line.empty()) line += " ";
          line += ck + "=" + text_scalar(cv);
        }
        std::cout << line << "\n";
      }
    } else {
      std::cout << key << ": " << text_scalar(value) << "\n";
    }
  }
}

CommandResult run_cmdet(const std::string& input_path) {
  const cmgeo::SquaredDistanceMatrix d = read_matrix_document(input_path);
  const Rational det = cmgeo::cm_determinant(d);
  const Rational vol_sq = cmgeo::simplex_volume_sq(d);
  const auto dimension = cmgeo::embedding_dimension(d);

  CommandResult result;
  result.report = {
      {"command", "cmdet"},
      {"points", d.points()},
      {"cm_det", cmgeo::format_rational(det)},
      {"vol_sq", cmgeo::format_rational(vol_sq)},
      {"verdict", dimension ? "realizable" : "not_realizable"},
      {"dimension", dimension_field(dimension)},
  };
  result.ok = dimension.has_value();
  return result;
}

CommandResult run_crosspoly(std::size_t n, const std::string& a_sq, const std::string& b_sq) {
  const cmgeo::CrossPolytopeSpec spec(n, parse_flag_rational(a_sq, "--a-sq"),
                                      parse_flag_rational(b_sq, "--b-sq"));
  const cmgeo::FlatnessVerdict verdict = cmgeo::classify_flatness(spec);

  CommandResult result;
  result.report = {
      {"command", "crosspoly"},
      {"n", n},
      {"a_sq", cmgeo::format_rational(spec.a_sq)},
      {"b_sq", cmgeo::format_rational(spec.b_sq)},
      {"cm_det", cmgeo::format_rational(verdict.cm_det)},
      {"closed_form", cmgeo::format_rational(verdict.closed_form)},
      {"equal", verdict.cm_det == verdict.closed_form},
      {"verdict", verdict_token(verdict.kind)},
      {"dimension", dimension_field(verdict.dimension)},
  };
  result.ok = verdict.kind != cmgeo::Flatness::not_realizable;
  return result;
}

CommandResult run_sweep(const std::string& n_text, const std::string& a_sq,
                        const std::string& a_sq_grid, const std::string& b_sq,
                        const std::string& b_sq_grid) {
  if (a_sq.empty() == a_sq_grid.empty()) {
    throw std::invalid_argument("sweep needs exactly one of --a-sq and --a-sq-grid");
  }
  if (b_sq.empty() == b_sq_grid.empty()) {
    throw std::invalid_argument("sweep needs exactly one of --b-sq and --b-sq-grid");
  }
  const std::vector<std::size_t> n_values = parse_n_values(n_text);
  const std::vector<Rational> a_values =
      a_sq.empty() ? parse_rational_grid(a_sq_grid, "--a-sq-grid")
                   : std::vector<Rational>{parse_flag_rational(a_sq, "--a-sq")};
  const std::vector<Rational> b_values =
      b_sq.empty() ? parse_rational_grid(b_sq_grid, "--b-sq-grid")
                   : std::vector<Rational>{parse_flag_rational(b_sq, "--b-sq")};

  CommandResult result;
  ordered_json cells = ordered_json::array();
  for (std::size_t n : n_values) {
    for (const Rational& a : a_values) {
      for (const Rational& b : b_values) {
        const cmgeo::FlatnessVerdict verdict =
            cmgeo::classify_flatness(cmgeo::CrossPolytopeSpec(n, a, b));
        cells.push_back({
            {"n", n},
            {"a_sq", cmgeo::format_rational(a)},
            {"b_sq", cmgeo::format_rational(b)},
            {"closed_form", cmgeo::format_rational(verdict.closed_form)},
            {"verdict", verdict_token(verdict.kind)},
            {"dimension", dimension_field(verdict.dimension)},
        });
        result.ok = result.ok && verdict.kind != cmgeo::Flatness::not_realizable;
      }
    }
  }
  result.report = {{"command", "sweep"}, {"cells", std::move(cells)}};
  return result;
}

CommandResult run_pentagon(const std::string& a_sq_text, const std::string& bracket,
                           double tol) {
  const Rational a_sq = parse_flag_rational(a_sq_text, "--a-sq");
  const std::vector<std::string> ends = split(bracket, ',');
  if (ends.size() != 2) throw std::invalid_argument("--bracket expects 'lo,hi'");
  const Rational lo = parse_flag_rational(ends[0], "--bracket");
  const Rational hi = parse_flag_rational(ends[1], "--bracket");

  const Rational det_lo = cmgeo::pentagon_cm_det(a_sq, lo);
  const Rational det_hi = cmgeo::pentagon_cm_det(a_sq, hi);
  const double root = cmgeo::pentagon_flat_diagonal(a_sq, lo, hi, tol);

  CommandResult result;
  result.report = {
      {"command", "pentagon"},
      {"a_sq", cmgeo::format_rational(a_sq)},
      {"bracket_lo", cmgeo::format_rational(lo)},
      {"bracket_hi", cmgeo::format_rational(hi)},
      {"tol", cmgeo::format_significant(tol)},
      {"det_lo", cmgeo::format_rational(det_lo)},
      {"det_hi", cmgeo::format_rational(det_hi)},
      {"root", cmgeo::format_significant(root)},
  };
  return result;
}

CommandResult run_mapping(std::size_t n, const std::string& a_sq) {
  const cmgeo::MappingScenario scenario(n, parse_flag_rational(a_sq, "--a-sq"));
  const cmgeo::MappingReport report = cmgeo::mapping_report(scenario);

  CommandResult result;
  result.report = {
      {"command", "mapping"},
      {"n", n},
      {"a_sq", cmgeo::format_rational(scenario.a_sq)},
      {"c_sq", cmgeo::format_rational(report.c_sq)},
      {"s_sq", cmgeo::format_rational(report.s_sq)},
      {"ratio_sq", cmgeo::format_rational(report.ratio_sq)},
      {"bridge", pass_token(report.bridge_ok)},
      {"threshold", pass_token(report.threshold_passed)},
      {"construction_dimension", report.construction_dimension},
      {"cross_polytope_flat", pass_token(report.cross_polytope_flat)},
      {"isometry_criterion", pass_token(report.isometry_criterion)},
  };
  result.ok = report.isometry_criterion;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmgeo - exact distance geometry: Cayley-Menger determinants, embedding "
               "dimension, cross-polytope flatness, pentagon diagonal locus"};
  app.require_subcommand(1);

  struct {
    std::string input;
    std::string n_text;
    std::size_t n = 0;
    std::string a_sq, b_sq, a_sq_grid, b_sq_grid;
    std::string bracket;
    double tol = 1e-9;
  } opt;

  auto add_output_flags = [](CLI::App* cmd, std::string& format, bool& strict) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--strict", strict, "exit 1 on a failed verdict");
  };
  std::string format = "text";
  bool strict = false;

  CLI::App* cmdet = app.add_subcommand(
      "cmdet", "determinant, squared volume and embedding dimension of a matrix document");
  cmdet->add_option("input", opt.input, "JSON document with 'points' and 'squared_distances', or -")
      ->required();
  add_output_flags(cmdet, format, strict);

  CLI::App* crosspoly =
      app.add_subcommand("crosspoly", "classify one equilateral, equidiagonal cross-polytope");
  crosspoly->add_option("--n", opt.n, "cross-polytope dimension")->required();
  crosspoly->add_option("--a-sq", opt.a_sq, "squared edge length")->required();
  crosspoly->add_option("--b-sq", opt.b_sq, "squared diagonal length")->required();
  add_output_flags(crosspoly, format, strict);

  CLI::App* sweep = app.add_subcommand("sweep", "classify a grid of cross-polytopes");
  sweep->add_option("--n", opt.n_text, "dimensions: '3', '2,5,7' or '2..8'")->required();
  sweep->add_option("--a-sq", opt.a_sq, "fixed squared edge length");
  sweep->add_option("--a-sq-grid", opt.a_sq_grid, "comma-separated squared edge lengths");
  sweep->add_option("--b-sq", opt.b_sq, "fixed squared diagonal length");
  sweep->add_option("--b-sq-grid", opt.b_sq_grid, "comma-separated squared diagonal lengths");
  add_output_flags(sweep, format, strict);

  CLI::App* pentagon = app.add_subcommand(
      "pentagon", "locate the squared diagonal flattening the equilateral pentagon");
  pentagon->add_option("--a-sq", opt.a_sq, "squared side length")->required();
  pentagon->add_option("--bracket", opt.bracket, "search bracket 'lo,hi'")->required();
  pentagon->add_option("--tol", opt.tol, "bisection tolerance");
  add_output_flags(pentagon, format, strict);

  CLI::App* mapping = app.add_subcommand(
      "mapping", "verify the two-distance isometry construction for one scenario");
  mapping->add_option("--n", opt.n, "domain dimension")->required();
  mapping->add_option("--a-sq", opt.a_sq, "squared preserved distance")->required();
  add_output_flags(mapping, format, strict);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CommandResult result;
    if (cmdet->parsed()) {
      result = run_cmdet(opt.input);
    } else if (crosspoly->parsed()) {
      result = run_crosspoly(opt.n, opt.a_sq, opt.b_sq);
    } else if (sweep->parsed()) {
      result = run_sweep(opt.n_text, opt.a_sq, opt.a_sq_grid, opt.b_sq, opt.b_sq_grid);
    } else if (pentagon->parsed()) {
      result = run_pentagon(opt.a_sq, opt.bracket, opt.tol);
    } else {
      result = run_mapping(opt.n, opt.a_sq);
    }
    emit(result.report, format);
    return (strict && !result.ok) ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
