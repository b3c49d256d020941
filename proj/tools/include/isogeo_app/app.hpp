#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isogeo/models.hpp"
#include "isogeo/numkit.hpp"
#include "isogeo/residual.hpp"

namespace isogeo::app {

// usage / configuration problems, mapped to exit code 2
struct ConfigError : Error {
  using Error::Error;
};

const std::vector<std::string>& all_suites();

struct RunConfig {
  std::string model;
  std::vector<std::string> suites;  // empty means all
  int points = 4;
  std::uint64_t seed = 1;
  std::map<std::string, double> tol_overrides;
  numkit::StepPolicy fd = numkit::StepPolicy::first_derivative();
  std::string out;

  void validate() const;
  std::vector<std::string> effective_suites() const;
};

struct Check {
  std::string suite;
  Residual r;
};

struct Report {
  RunConfig config;
  std::vector<Check> checks;
  std::vector<std::string> skipped;   // suites not applicable to the model
  std::vector<std::string> warnings;
  nlohmann::json versions;
  std::string generated_at;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

// parse "name=value"
std::pair<std::string, double> parse_tol(const std::string& s);
std::vector<std::string> parse_suites(const std::string& csv);

Report run_verify(const RunConfig& cfg);

nlohmann::json to_json(const Report& r);
// body only: the json with generated_at removed, dumped with sorted keys
std::string report_body(const nlohmann::json& j);
std::string render_markdown(const nlohmann::json& j);
// writes JSON, or markdown when the path ends in .md
void write_report(const Report& r, const std::string& path);
std::string summary_line(const Report& r);

std::string list_models_table();

struct ExportRequest {
  std::string model;
  std::optional<int> point;
  std::uint64_t seed = 1;
  numkit::StepPolicy fd = numkit::StepPolicy::first_derivative();
};
nlohmann::json export_alpha(const ExportRequest& req);

std::string sha256_hex(const std::string& data);
std::string utc_timestamp();

}  // namespace isogeo::app
