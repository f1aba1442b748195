#include "hardy/spec_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace hardy {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- parsing --

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw spec_error(path + ": " + message);
}

const json& require_field(const json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a [re, im] pair");
  return {as_double(j[0], path + "[0]"), as_double(j[1], path + "[1]")};
}

int parse_mode_key(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("trailing characters");
    return n;
  } catch (const std::exception&) {
    fail(path + "." + key, "coefficient keys must be integer mode numbers");
  }
}

std::map<int, MatrixValue> coeff_map_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object mapping modes to matrices");
  if (j.empty()) fail(path, "coefficient map is empty");
  std::map<int, MatrixValue> coeffs;
  for (const auto& [key, value] : j.items()) {
    const int n = parse_mode_key(key, path);
    coeffs.emplace(n, matrix_from_json(value, path + "." + key));
  }
  return coeffs;
}

// ------------------------------------------------------------- formatting --

std::string fmt_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

ParsedSpec spec_from_gallery(GallerySpec gspec) {
  std::variant<CircleFunction, DiskFunction> fn = build_gallery(gspec);
  return ParsedSpec{std::move(gspec), std::move(fn)};
}

}  // namespace

MatrixValue matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (!j[0].is_array() || j[0].empty()) {
    fail(path + "[0]", "expected a nonempty array of [re, im] entries");
  }
  cols = j[0].size();
  MatrixValue a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(row_path, "rows must all have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c], row_path + "[" + std::to_string(c) + "]");
    }
  }
  return a;
}

nlohmann::json matrix_to_json(const MatrixValue& a) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      row.push_back(json::array({a(r, c).real(), a(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ParsedSpec parse_spec(const json& doc) {
  if (!doc.is_object()) fail("$", "spec must be a JSON object");
  const json& type = require_field(doc, "type", "$");
  if (!type.is_string()) fail("$.type", "expected a string");
  const std::string name = type.get<std::string>();

  if (name == "taylor_polynomial") {
    const json& coeffs = require_field(doc, "coeffs", "$");
    if (!coeffs.is_array() || coeffs.empty()) {
      fail("$.coeffs", "expected a nonempty array of matrices (index = power)");
    }
    TaylorPolynomial t;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      t.coeffs.push_back(matrix_from_json(coeffs[m], "$.coeffs[" + std::to_string(m) + "]"));
    }
    try {
      return ParsedSpec{std::nullopt, DiskFunction(std::move(t))};
    } catch (const std::invalid_argument& e) {
      fail("$.coeffs", e.what());
    }
  }

  if (name == "sampled") {
    const json& values = require_field(doc, "values", "$");
    if (!values.is_array() || values.empty()) {
      fail("$.values", "expected a nonempty array of matrices, one per node");
    }
    SampledFunction s;
    s.grid = make_grid(static_cast<int>(values.size()));
    for (std::size_t j2 = 0; j2 < values.size(); ++j2) {
      s.values.push_back(matrix_from_json(values[j2], "$.values[" + std::to_string(j2) + "]"));
    }
    try {
      return ParsedSpec{std::nullopt, CircleFunction(std::move(s))};
    } catch (const std::invalid_argument& e) {
      fail("$.values", e.what());
    }
  }

  GalleryKind kind;
  try {
    kind = parse_kind(name);
  } catch (const spec_error&) {
    fail("$.type", "unknown type '" + name + "'");
  }

  GallerySpec gspec;
  gspec.kind = kind;
  if (const auto it = doc.find("dim"); it != doc.end()) {
    gspec.dim = as_int(*it, "$.dim");
    if (gspec.dim < 1) fail("$.dim", "dim must be >= 1");
  }
  if (kind == GalleryKind::matrix_polynomial) {
    if (const auto it = doc.find("coeffs"); it != doc.end()) {
      gspec.coeffs = coeff_map_from_json(*it, "$.coeffs");
    }
    if (const auto it = doc.find("seed"); it != doc.end()) {
      if (!it->is_number_integer()) fail("$.seed", "expected an integer");
      gspec.seed = it->get<std::uint64_t>();
    }
    if (const auto it = doc.find("degree"); it != doc.end()) {
      gspec.degree = as_int(*it, "$.degree");
      if (gspec.degree < 1) fail("$.degree", "degree must be >= 1");
    }
    if (gspec.coeffs.empty() && !gspec.seed) {
      fail("$", "matrix_polynomial needs either coeffs or a seed");
    }
  }
  try {
    return spec_from_gallery(std::move(gspec));
  } catch (const std::invalid_argument& e) {
    fail("$", e.what());
  }
}

ParsedSpec parse_spec_bytes(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw spec_error(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_spec(doc);
}

ParsedSpec parse_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw spec_error("cannot read spec file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_bytes(buffer.str());
}

// ------------------------------------------------------------ serializers --

nlohmann::json report_to_json(const VerificationReport& report) {
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back(json{{"label", row.label},
                        {"n_points", row.n_points},
                        {"ladder_k", row.ladder_k},
                        {"dim", row.dim},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"abs_dev", row.abs_dev},
                        {"rel_dev", row.rel_dev},
                        {"ok", row.ok}});
  }
  return json{{"claim", report.claim},
              {"tolerance", report.tolerance},
              {"notes", report.notes},
              {"rows", std::move(rows)},
              {"verdict", report.verdict}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  report.claim = require_field(j, "claim", "$").get<std::string>();
  report.tolerance = as_double(require_field(j, "tolerance", "$"), "$.tolerance");
  report.notes = require_field(j, "notes", "$").get<std::string>();
  report.verdict = require_field(j, "verdict", "$").get<bool>();
  const json& rows = require_field(j, "rows", "$");
  if (!rows.is_array()) fail("$.rows", "expected an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& r = rows[i];
    const std::string path = "$.rows[" + std::to_string(i) + "]";
    ReportRow row;
    row.label = require_field(r, "label", path).get<std::string>();
    row.n_points = as_int(require_field(r, "n_points", path), path + ".n_points");
    row.ladder_k = as_int(require_field(r, "ladder_k", path), path + ".ladder_k");
    row.dim = as_int(require_field(r, "dim", path), path + ".dim");
    row.lhs = as_double(require_field(r, "lhs", path), path + ".lhs");
    row.rhs = as_double(require_field(r, "rhs", path), path + ".rhs");
    row.abs_dev = as_double(require_field(r, "abs_dev", path), path + ".abs_dev");
    row.rel_dev = as_double(require_field(r, "rel_dev", path), path + ".rel_dev");
    row.ok = require_field(r, "ok", path).get<bool>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "label,n_points,ladder_k,dim,lhs,rhs,abs_dev,rel_dev,ok\n";
  out << "row-name,grid-size,ladder-depth,dimension,value,value,deviation,relative,flag\n";
  for (const ReportRow& row : report.rows) {
    out << row.label << ',' << row.n_points << ',' << row.ladder_k << ',' << row.dim
        << ',' << fmt_double(row.lhs) << ',' << fmt_double(row.rhs) << ','
        << fmt_double(row.abs_dev) << ',' << fmt_double(row.rel_dev) << ','
        << (row.ok ? "pass" : "fail") << '\n';
  }
  return out.str();
}

nlohmann::json profile_to_json(const NormProfile& profile) {
  json rows = json::array();
  for (const auto& [r, value] : profile.per_radius) {
    rows.push_back(json::array({r, value}));
  }
  return json{{"p", profile.p.str()},
              {"per_radius", std::move(rows)},
              {"final_value", profile.final_value}};
}

std::string profile_to_csv(const NormProfile& profile) {
  std::ostringstream out;
  out << "r,section_norm\n";
  out << "radius,L^" << profile.p.str() << "-norm\n";
  for (const auto& [r, value] : profile.per_radius) {
    out << fmt_double(r) << ',' << fmt_double(value) << '\n';
  }
  return out.str();
}

nlohmann::json convergence_to_json(const std::vector<ConvergenceRow>& rows) {
  json out = json::array();
  for (const ConvergenceRow& row : rows) {
    json entry{{"r", row.r}, {"max_pointwise_deviation", row.max_pointwise_deviation}};
    if (row.lp_deviation) {
      entry["lp_deviation"] = *row.lp_deviation;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "r,lp_deviation,max_pointwise_deviation\n";
  out << "radius,L^p-norm-of-deviation,max-op-norm-of-deviation\n";
  for (const ConvergenceRow& row : rows) {
    out << fmt_double(row.r) << ',';
    if (row.lp_deviation) out << fmt_double(*row.lp_deviation);
    out << ',' << fmt_double(row.max_pointwise_deviation) << '\n';
  }
  return out.str();
}

nlohmann::json sampled_to_json(const SampledFunction& s) {
  json values = json::array();
  for (const MatrixValue& v : s.values) {
    values.push_back(matrix_to_json(v));
  }
  return json{{"n_points", s.grid.n_points}, {"values", std::move(values)}};
}

nlohmann::json boundary_to_json(const BoundaryResult& result) {
  json nodes = json::array();
  const int n = result.boundary.grid.n_points;
  for (int j = 0; j < n; ++j) {
    const std::size_t idx = static_cast<std::size_t>(j);
    nodes.push_back(json{{"index", j},
                         {"theta", 2.0 * std::numbers::pi * j / n},
                         {"residual", result.per_node_residual.values[idx]},
                         {"value_norm", result.boundary.values[idx].norm()},
                         {"radial_norm_proxy", result.radial_norm_proxy.values[idx]}});
  }
  return json{{"basis_dimension", result.basis_dimension},
              {"ladder_levels", result.ladder_used.levels},
              {"max_residual", result.max_residual()},
              {"proxy_note",
               "radial_norm_proxy is the max section norm over the top three "
               "rungs, a heuristic stand-in for the radial limit inferior"},
              {"nodes", std::move(nodes)},
              {"boundary", sampled_to_json(result.boundary)}};
}

std::string boundary_to_csv(const BoundaryResult& result) {
  std::ostringstream out;
  out << "index,theta,residual,value_norm,radial_norm_proxy\n";
  out << "node,angle-radians,extrapolation-increment,frobenius-norm,max-top3-section-norm\n";
  const int n = result.boundary.grid.n_points;
  for (int j = 0; j < n; ++j) {
    const std::size_t idx = static_cast<std::size_t>(j);
    out << j << ',' << fmt_double(2.0 * std::numbers::pi * j / n) << ','
        << fmt_double(result.per_node_residual.values[idx]) << ','
        << fmt_double(result.boundary.values[idx].norm()) << ','
        << fmt_double(result.radial_norm_proxy.values[idx]) << '\n';
  }
  return out.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

// -------------------------------------------------------------- CLI runner --

namespace {

struct CommandOutput {
  std::string artifact;
  std::string summary;
  int exit_code = 0;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CommandOutput run_fourier(const RunConfig& config, const ParsedSpec& spec) {
  if (!spec.is_circle()) {
    throw spec_error("fourier requires a circle function spec");
  }
  const CircleFunction& f = spec.circle();
  const CircleGrid grid = make_grid(config.grid_n);
  int window = std::max(1, config.grid_n / 4);
  if (f.is_fourier()) {
    window = std::max(1, f.as_fourier().degree());
  } else if (f.is_rule() && f.as_rule().bandlimit) {
    window = std::max(1, *f.as_rule().bandlimit);
  }
  window = std::min(window, 64);

  json modes = json::object();
  for (int n = -window; n <= window; ++n) {
    modes[std::to_string(n)] = matrix_to_json(fourier_coefficient(f, n, grid));
  }
  const AnalyticityReport defect = analytic_defect(f, window, grid);

  CommandOutput out;
  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "mode,op_norm\n";
    csv << "index,operator-norm\n";
    for (int n = -window; n <= window; ++n) {
      csv << n << ',' << fmt_double(op_norm(fourier_coefficient(f, n, grid))) << '\n';
    }
    out.artifact = csv.str();
  } else {
    out.artifact = dump(json{{"command", "fourier"},
                             {"n_points", grid.n_points},
                             {"window", window},
                             {"modes", std::move(modes)},
                             {"analytic_defect", defect.max_negative_defect},
                             {"worst_mode", defect.worst_mode}});
  }
  out.summary = "fourier: modes -" + std::to_string(window) + ".." +
                std::to_string(window) + " on " + std::to_string(grid.n_points) +
                " nodes, analytic defect " + fmt_double(defect.max_negative_defect);
  return out;
}

CommandOutput run_poisson(const RunConfig& config, const ParsedSpec& spec) {
  if (!spec.is_circle()) {
    throw spec_error("poisson requires a circle function spec");
  }
  if (!config.zeta) {
    throw spec_error("poisson requires --zeta RE IM");
  }
  const Complex zeta = *config.zeta;
  if (std::abs(zeta) >= 1.0) {
    throw spec_error("poisson: |zeta| must be < 1");
  }
  const CircleGrid grid = make_grid(config.grid_n);
  const MatrixValue value = strong_poisson(spec.circle(), zeta, grid);
  const double magnitude = op_norm(value);

  CommandOutput out;
  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "zeta_re,zeta_im,op_norm\n";
    csv << "real-part,imag-part,operator-norm\n";
    csv << fmt_double(zeta.real()) << ',' << fmt_double(zeta.imag()) << ','
        << fmt_double(magnitude) << '\n';
    out.artifact = csv.str();
  } else {
    out.artifact = dump(json{{"command", "poisson"},
                             {"zeta", json::array({zeta.real(), zeta.imag()})},
                             {"n_points", grid.n_points},
                             {"value", matrix_to_json(value)},
                             {"op_norm", magnitude}});
  }
  out.summary = "poisson at (" + fmt_double(zeta.real()) + "," + fmt_double(zeta.imag()) +
                "): op_norm " + fmt_double(magnitude);
  return out;
}

CommandOutput run_norm(const RunConfig& config, const ParsedSpec& spec) {
  const Exponent p = Exponent::parse(config.p);
  const CircleGrid grid = make_grid(config.grid_n);
  CommandOutput out;
  if (spec.is_circle()) {
    const CircleFunction& f = spec.circle();
    const double sot = lp_sot_norm(f, p, grid);
    const double strong2 = l2_strong_norm(f, grid);
    const int n_probe = static_cast<int>(f.cols()) + 4;
    const double estimate = lp_strong_norm_estimate(f, p, n_probe, config.seed, grid);
    if (config.format == "csv") {
      std::ostringstream csv;
      csv << "quantity,value\n";
      csv << "name,magnitude\n";
      csv << "lp_sot," << fmt_double(sot) << '\n';
      csv << "lp_sot_squared," << fmt_double(sot * sot) << '\n';
      csv << "l2_strong," << fmt_double(strong2) << '\n';
      csv << "lp_strong_estimate," << fmt_double(estimate) << '\n';
      out.artifact = csv.str();
    } else {
      out.artifact = dump(json{{"command", "norm"},
                               {"p", p.str()},
                               {"n_points", grid.n_points},
                               {"lp_sot", sot},
                               {"lp_sot_squared", sot * sot},
                               {"l2_strong", strong2},
                               {"lp_strong_estimate", estimate},
                               {"n_probe", n_probe},
                               {"seed", config.seed}});
    }
    out.summary = "norm(p=" + p.str() + "): lp_sot " + fmt_double(sot) + ", l2_strong " +
                  fmt_double(strong2);
  } else {
    const DiskFunction& h = spec.disk();
    const RadiusLadder ladder = make_ladder(config.ladder_k);
    const NormProfile profile = hp_disk_norm(h, p, ladder, grid);
    const double strong_disk = l2_strong_disk_norm(h, ladder, grid);
    if (config.format == "csv") {
      out.artifact = profile_to_csv(profile);
    } else {
      out.artifact = dump(json{{"command", "norm"},
                               {"p", p.str()},
                               {"n_points", grid.n_points},
                               {"profile", profile_to_json(profile)},
                               {"l2_strong_disk", strong_disk}});
    }
    out.summary = "norm(p=" + p.str() + "): disk profile final " +
                  fmt_double(profile.final_value) + ", l2_strong_disk " +
                  fmt_double(strong_disk);
  }
  return out;
}

CommandOutput run_boundary(const RunConfig& config, const ParsedSpec& spec) {
  const CircleGrid grid = make_grid(config.grid_n);
  const RadiusLadder ladder = make_ladder(config.ladder_k);
  const BoundaryResult result =
      spec.is_circle()
          ? radial_boundary(make_poisson_extension(spec.circle(), grid), grid, ladder,
                            config.tol)
          : radial_boundary(spec.disk(), grid, ladder, config.tol);

  CommandOutput out;
  out.artifact = config.format == "csv" ? boundary_to_csv(result)
                                        : dump(boundary_to_json(result));
  out.summary = "boundary: max residual " + fmt_double(result.max_residual()) +
                ", basis dimension " + std::to_string(result.basis_dimension);
  return out;
}

CommandOutput run_gallery(const RunConfig& config, const ParsedSpec& spec) {
  const CircleGrid grid = make_grid(config.grid_n);
  json doc{{"command", "gallery"}};
  if (spec.gallery) {
    doc["name"] = kind_name(spec.gallery->kind);
    doc["dim"] = spec.gallery->dim;
  }
  SampledFunction samples;
  if (spec.is_circle()) {
    samples = sample(spec.circle(), grid);
    doc["domain"] = "circle";
    doc["rows"] = spec.circle().rows();
    doc["cols"] = spec.circle().cols();
  } else {
    const RadiusLadder ladder = make_ladder(config.ladder_k);
    const double r = ladder.radii.back();
    samples = radial_section(spec.disk(), r, grid);
    doc["domain"] = "disk";
    doc["section_radius"] = r;
    doc["rows"] = spec.disk().rows();
    doc["cols"] = spec.disk().cols();
  }
  doc["samples"] = sampled_to_json(samples);

  CommandOutput out;
  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "index,theta,value_norm\n";
    csv << "node,angle-radians,frobenius-norm\n";
    for (int j = 0; j < grid.n_points; ++j) {
      csv << j << ',' << fmt_double(2.0 * std::numbers::pi * j / grid.n_points) << ','
          << fmt_double(samples.values[static_cast<std::size_t>(j)].norm()) << '\n';
    }
    out.artifact = csv.str();
  } else {
    out.artifact = dump(doc);
  }
  std::ostringstream summary;
  summary << "gallery: " << (spec.gallery ? kind_name(spec.gallery->kind) : "custom")
          << " shape " << doc["rows"].get<Eigen::Index>() << "x"
          << doc["cols"].get<Eigen::Index>() << " on " << grid.n_points << " nodes";
  out.summary = summary.str();
  return out;
}

CommandOutput run_verify(const RunConfig& config, const ParsedSpec* spec) {
  VerificationReport report;
  if (config.claim == "isometry") {
    if (spec == nullptr || !spec->is_circle()) {
      throw spec_error("verify --claim isometry requires a circle function spec");
    }
    std::vector<Resolution> resolutions;
    for (int back = 3; back >= 0; --back) {
      const int n = config.grid_n >> back;
      const int k = config.ladder_k - back;
      if (n < 32 || k < 3) continue;
      resolutions.push_back({n, k});
    }
    if (resolutions.empty()) {
      resolutions.push_back({std::max(32, config.grid_n), std::max(3, config.ladder_k)});
    }
    report = verify_isometry(spec->circle(), Exponent::parse(config.p), resolutions,
                             config.tol >= 1e-3 ? config.tol : 1e-3);
  } else if (config.claim == "contraction") {
    if (spec == nullptr || !spec->is_circle()) {
      throw spec_error("verify --claim contraction requires a circle function spec");
    }
    report = verify_contraction_nonanalytic(spec->circle(), Exponent::parse(config.p),
                                            make_ladder(config.ladder_k),
                                            make_grid(config.grid_n));
  } else if (config.claim == "adjoint") {
    if (spec == nullptr || !spec->is_circle()) {
      throw spec_error("verify --claim adjoint requires a circle function spec");
    }
    const std::vector<Complex> probes = {
        {0.0, 0.0}, {0.5, 0.0}, {0.3, 0.4}, {-0.6, 0.1}, {0.2, -0.7}};
    report = verify_adjoint_identity(spec->circle(), probes, make_grid(config.grid_n));
  } else if (config.claim == "roundtrip") {
    if (spec == nullptr || !spec->is_circle()) {
      throw spec_error("verify --claim roundtrip requires a circle function spec");
    }
    report = verify_boundary_roundtrip(spec->circle(), make_grid(config.grid_n),
                                       make_ladder(config.ladder_k), config.tol);
  } else if (config.claim == "gaps") {
    const std::vector<int> dims = {1, 4, 16};
    report = verify_containment_gaps(dims);
  } else {
    throw spec_error("unknown claim '" + config.claim +
                     "' (expected isometry, contraction, adjoint, roundtrip, or gaps)");
  }

  double worst_rel = 0.0;
  for (const ReportRow& row : report.rows) {
    worst_rel = std::max(worst_rel, row.rel_dev);
  }
  CommandOutput out;
  out.artifact = config.format == "csv" ? report_to_csv(report)
                                        : dump(report_to_json(report));
  out.summary = "verify " + report.claim + ": " +
                (report.verdict ? "PASS" : "FAIL") + " (" +
                std::to_string(report.rows.size()) + " rows, max rel_dev " +
                fmt_double(worst_rel) + ")";
  out.exit_code = report.verdict ? 0 : 1;
  return out;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    if (config.grid_n < 2) throw spec_error("--grid must be >= 2");
    if (config.ladder_k < 1) throw spec_error("--ladder must be >= 1");
    if (!(config.tol > 0.0)) throw spec_error("--tol must be > 0");
    if (config.format != "json" && config.format != "csv") {
      throw spec_error("--format must be json or csv");
    }

    std::optional<ParsedSpec> spec;
    if (!config.spec_path.empty()) {
      spec = parse_spec_file(config.spec_path);
    }

    CommandOutput out;
    if (config.command == "fourier" || config.command == "poisson" ||
        config.command == "norm" || config.command == "boundary" ||
        config.command == "gallery") {
      if (!spec) throw spec_error(config.command + " requires --spec PATH");
      if (config.command == "fourier") out = run_fourier(config, *spec);
      else if (config.command == "poisson") out = run_poisson(config, *spec);
      else if (config.command == "norm") out = run_norm(config, *spec);
      else if (config.command == "boundary") out = run_boundary(config, *spec);
      else out = run_gallery(config, *spec);
    } else if (config.command == "verify") {
      if (config.claim.empty()) throw spec_error("verify requires --claim NAME");
      out = run_verify(config, spec ? &*spec : nullptr);
    } else {
      throw spec_error("unknown command '" + config.command + "'");
    }

    if (config.out_path.empty()) {
      std::cout << out.artifact;
      std::cerr << out.summary << '\n';
    } else {
      write_atomic(config.out_path, out.artifact);
      std::cout << out.summary << '\n';
    }
    return out.exit_code;
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hardy
