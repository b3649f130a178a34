#pragma once

#include <cstdint>
#include <string>

#include "spinorkit/report.hpp"

namespace spinorkit {

struct RunConfig {
  std::string command = "all";  // verify-algebra | verify-norms | counterexample |
                                // simulate-singlet | chsh | all
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  std::uint64_t pairs = 20;
  double tolerance = 1e-10;
  std::string format = "json";  // json | csv
  std::string output;           // empty writes to stdout
  int workers = 1;
  std::string dump_trials_path;  // per-trial CSV of the first simulated pair
};

// Runs the named campaign and returns its report. Throws
// std::invalid_argument for configs that violate the preconditions
// (trials >= 1, pairs >= 1, tolerance > 0, known command).
Report run_campaign(const RunConfig& config);

void campaign_verify_algebra(Report& report, const RunConfig& config);
void campaign_verify_norms(Report& report, const RunConfig& config);
void campaign_counterexample(Report& report);
void campaign_simulate_singlet(Report& report, const RunConfig& config);
void campaign_chsh(Report& report, const RunConfig& config);

}  // namespace spinorkit
