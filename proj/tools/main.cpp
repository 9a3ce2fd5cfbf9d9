// Command-line front end: static assessment, timeline simulation,
// entry-point ranking, and scenario validation. Exit codes: 0 when the
// run completes and no intolerable verdict was found (or none was asked
// for), 1 when the simulated timeline contains an intolerable step, 2 for
// any input problem (diagnostics on stderr).
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "embsec/report.hpp"
#include "embsec/scenario_io.hpp"

namespace {

void print_violations(const std::vector<embsec::Violation>& violations) {
  for (const auto& v : violations) {
    std::cerr << v.code;
    if (!v.where.empty()) std::cerr << " at " << v.where;
    std::cerr << ": " << v.message << "\n";
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Loads from a file or a --builtin id; returns 0 or exit code 2.
int load(const std::string& file, const std::string& builtin, embsec::Scenario& out) {
  if (!builtin.empty() && !file.empty()) {
    std::cerr << "error: give either a scenario file or --builtin, not both\n";
    return 2;
  }
  if (builtin.empty() && file.empty()) {
    std::cerr << "error: a scenario file or --builtin is required\n";
    return 2;
  }
  if (!builtin.empty()) {
    std::optional<embsec::Scenario> scenario = embsec::builtin_scenario(builtin);
    if (!scenario) {
      std::cerr << "error: unknown builtin scenario '" << builtin << "'; available:";
      for (const auto& id : embsec::builtin_ids()) std::cerr << " " << id;
      std::cerr << "\n";
      return 2;
    }
    out = std::move(*scenario);
    return 0;
  }
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return 2;
  }
  embsec::ParseResult parsed = embsec::parse_scenario(text);
  if (!parsed.ok()) {
    print_violations(parsed.violations);
    return 2;
  }
  out = std::move(*parsed.scenario);
  return 0;
}

embsec::ReportFormat format_of(const std::string& name) {
  return name == "json" ? embsec::ReportFormat::Json : embsec::ReportFormat::Text;
}

std::string fixed2(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Risk assessment and attack simulation for modular embodied robots"};
  app.require_subcommand(1);

  std::string file;
  std::string builtin;
  std::string format = "text";
  double alpha = 1.0;
  double beta = 1.0;
  double threshold = 1.5;
  std::string validate_file;

  CLI::App* assess_cmd = app.add_subcommand(
      "assess", "Score device criticality and list lateral entry points");
  assess_cmd->add_option("file", file, "Scenario file (JSON)");
  assess_cmd->add_option("--builtin", builtin, "Built-in scenario id");
  CLI::Option* alpha_opt =
      assess_cmd->add_option("--alpha", alpha, "Override the own-risk weight");
  CLI::Option* beta_opt =
      assess_cmd->add_option("--beta", beta, "Override the neighbor-risk weight");
  assess_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Run the attack timeline, judge each step and plan mitigations");
  simulate_cmd->add_option("file", file, "Scenario file (JSON)");
  simulate_cmd->add_option("--builtin", builtin, "Built-in scenario id");
  simulate_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* rank_cmd = app.add_subcommand(
      "rank", "List lateral entry points at or above a risk threshold");
  rank_cmd->add_option("file", file, "Scenario file (JSON)");
  rank_cmd->add_option("--builtin", builtin, "Built-in scenario id");
  rank_cmd->add_option("--threshold", threshold, "Minimum path risk")->required();

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Check a scenario file against the schema and model rules");
  validate_cmd->add_option("file", validate_file, "Scenario file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(assess_cmd)) {
    embsec::Scenario scenario;
    if (int rc = load(file, builtin, scenario)) return rc;
    if (alpha_opt->count() > 0) scenario.weights.alpha = alpha;
    if (beta_opt->count() > 0) scenario.weights.beta = beta;
    if (scenario.weights.alpha < 0.0 || scenario.weights.beta < 0.0) {
      std::cerr << "error: weights must be non-negative\n";
      return 2;
    }
    std::cout << embsec::render_report(embsec::assess(scenario), format_of(format));
    return 0;
  }

  if (app.got_subcommand(simulate_cmd)) {
    embsec::Scenario scenario;
    if (int rc = load(file, builtin, scenario)) return rc;
    const embsec::AssessmentReport report = embsec::simulate(scenario);
    std::cout << embsec::render_report(report, format_of(format));
    for (const auto& verdict : report.timeline)
      if (!verdict.tolerable) return 1;
    return 0;
  }

  if (app.got_subcommand(rank_cmd)) {
    embsec::Scenario scenario;
    if (int rc = load(file, builtin, scenario)) return rc;
    if (threshold < 0.0) {
      std::cerr << "error: threshold must be non-negative\n";
      return 2;
    }
    scenario.thresholds.entry_point_risk = threshold;
    const embsec::AssessmentReport report = embsec::assess(scenario);
    std::cout << "Lateral Entry Points (risk >= " << fixed2(report.entry_point_risk)
              << ") [Protect/LateralMovement]\n";
    if (report.entry_points.empty()) {
      std::cout << "  none\n";
    } else {
      for (const auto& ep : report.entry_points) {
        std::cout << "  " << ep.entry << ": ";
        for (std::size_t i = 0; i < ep.path_risk.path.size(); ++i) {
          if (i > 0) std::cout << " -> ";
          std::cout << ep.path_risk.path[i];
        }
        std::cout << " (risk " << fixed2(ep.path_risk.risk) << ")\n";
      }
    }
    return 0;
  }

  // validate
  std::string text;
  if (!read_file(validate_file, text)) {
    std::cerr << "error: cannot read '" << validate_file << "'\n";
    return 2;
  }
  embsec::ParseResult parsed = embsec::parse_scenario(text);
  if (!parsed.ok()) {
    print_violations(parsed.violations);
    return 2;
  }
  std::cout << "valid\n";
  return 0;
}
