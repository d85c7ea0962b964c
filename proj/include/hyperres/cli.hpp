// Batch experiment runner behind the `hyperres` command-line tool. Every
// command takes a fully resolved ExperimentConfig and returns a Report; the
// tool only parses flags and writes the report out.

#ifndef HYPERRES_CLI_HPP
#define HYPERRES_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hyperres::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

struct ExperimentConfig {
  std::string command;

  // Common to every command.
  std::string field = "65521";
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  std::string out;
  std::string format = "json";
  bool exploratory = false;

  // Ring: explicit variables and ideal, or a toric presentation (optionally
  // cut further by `ideal`, written in the presentation variables).
  std::vector<std::string> vars;
  std::string ideal;
  std::string toric;
  /// Degrees of extra random homogeneous generators added to the ideal.
  std::vector<unsigned> random_gens;

  // Forms.
  std::string forms;
  std::size_t random_forms = 0;
  bool structured = false;
  std::string variant;
  bool zero_form = false;

  // Degrees and corpus shape.
  int degree = 2;
  std::size_t max_vars = 4;
  unsigned max_gen_degree = 3;
  int max_degree = 4;
  bool stronger = false;

  // lex-restrict.
  std::string hf;
  std::size_t nvars = 3;
  int horizon = 5;

  // eakin-sathaye.
  unsigned power = 1;
  unsigned num_elements = 1;
  std::size_t max_trials = 32;
  std::uint64_t characteristic_bound = 65521;
};

nlohmann::ordered_json to_json(const ExperimentConfig& config);

struct Report {
  nlohmann::ordered_json document;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_status = kExitOk;
};

Report cmd_green_check(const ExperimentConfig& config);
Report cmd_grd_verify(const ExperimentConfig& config);
Report cmd_lex_restrict(const ExperimentConfig& config);
Report cmd_eakin_sathaye(const ExperimentConfig& config);
Report cmd_toric_demo(const ExperimentConfig& config);

/// Dispatches on config.command. Throws std::invalid_argument for unknown commands.
Report run_command(const ExperimentConfig& config);

std::string render_json(const Report& report);
std::string render_csv(const Report& report);
/// Renders in config.format and writes to config.out, or stdout when empty.
void write_report(const Report& report, const ExperimentConfig& config);

/// Copy of `document` with every "elapsed_ms" member removed, recursively.
nlohmann::ordered_json without_timing(const nlohmann::ordered_json& document);

}  // namespace hyperres::cli

#endif  // HYPERRES_CLI_HPP
