#pragma once

#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tg/solvers.hpp"
#include "tg/temporal_graph.hpp"

// Exit codes shared by every subcommand: 0 success, 1 property or acceptance
// failure, 2 usage / validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Thrown by subcommands whose checks ran but did not pass (exit 1).
struct CheckFailed {};

void setup_generate(CLI::App& app);
void setup_simulate(CLI::App& app);
void setup_solve(CLI::App& app);
void setup_verify(CLI::App& app);
void setup_bench(CLI::App& app);

namespace tgim {

tg::Schedule parse_schedule_list(const std::string& csv);

/// "fixed:W" or "shifting:X,Y" flag value.
tg::ScheduleConstraint parse_constraint(const std::string& text);

nlohmann::json result_json(const tg::ProblemInstance& inst,
                           const tg::SolveResult& res, bool with_answer);

}  // namespace tgim
