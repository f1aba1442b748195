#pragma once

#include "hardy/boundary.hpp"
#include "hardy/gallery.hpp"
#include "hardy/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hardy {

// Result of ingesting a JSON function spec: the constructed function, plus
// the gallery description when the spec named a gallery member.
struct ParsedSpec {
  std::optional<GallerySpec> gallery;
  std::variant<CircleFunction, DiskFunction> fn;

  bool is_circle() const { return std::holds_alternative<CircleFunction>(fn); }
  const CircleFunction& circle() const { return std::get<CircleFunction>(fn); }
  const DiskFunction& disk() const { return std::get<DiskFunction>(fn); }
};

// Parses a JSON document into a function. Malformed input raises spec_error
// whose message names the offending field path.
ParsedSpec parse_spec(const nlohmann::json& doc);
ParsedSpec parse_spec_bytes(std::string_view text);
ParsedSpec parse_spec_file(const std::filesystem::path& path);

// Complex scalars as [re, im]; matrices as nested row-major arrays.
nlohmann::json matrix_to_json(const MatrixValue& a);
MatrixValue matrix_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string report_to_csv(const VerificationReport& report);

nlohmann::json profile_to_json(const NormProfile& profile);
std::string profile_to_csv(const NormProfile& profile);

nlohmann::json convergence_to_json(const std::vector<ConvergenceRow>& rows);
std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);

nlohmann::json boundary_to_json(const BoundaryResult& result);
std::string boundary_to_csv(const BoundaryResult& result);

nlohmann::json sampled_to_json(const SampledFunction& s);

// Writes content to path atomically (temp file in the same directory, then
// rename over the target).
void write_atomic(const std::filesystem::path& path, std::string_view content);

// Everything one CLI invocation needs.
struct RunConfig {
  std::string command;        // fourier | poisson | norm | boundary | gallery | verify
  std::string spec_path;
  int grid_n = 256;
  int ladder_k = 10;
  std::string p = "2";
  std::string out_path;       // empty: artifact goes to standard output
  std::string format = "json";
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::string claim;          // verify only
  std::optional<Complex> zeta;  // poisson only
};

// Dispatches a parsed config. Returns the process exit status: 0 success,
// 1 verification failure, 2 usage/validation error. Writes the artifact
// atomically to out_path (or standard output when out_path is empty) and a
// one-line summary to standard output; diagnostics go to standard error.
int run(const RunConfig& config);

}  // namespace hardy
