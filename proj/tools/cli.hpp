#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "capfee/analysis.hpp"
#include "capfee/config.hpp"
#include "capfee/model.hpp"
#include "capfee/oracle.hpp"
#include "capfee/solver.hpp"

namespace capfee::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kUsageError = 1,
    kInvariantViolation = 2,
    kOracleDisagreement = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit status. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json config_to_json(const ScenarioConfig& cfg);
ScenarioConfig config_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const EquilibriumReport& r);

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_trace_csv(std::ostream& os, const GameTrace& trace);

/// Human-readable block: fractions to 4 decimals, money to 2.
std::string format_report(const EquilibriumReport& r);

}  // namespace capfee::cli
