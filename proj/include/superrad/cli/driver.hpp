#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "superrad/cli/config.hpp"
#include "superrad/cli/output.hpp"

namespace superrad::cli {

struct DriverOptions {
  bool quiet = false;
};

/// One run into `dir`: config.ini, gain.csv, summary.txt, snapshots/ and
/// amplitude.csv. A config carrying a sweep is rejected; use run_sweep.
RunSummary run_config(const RunConfig& config, const std::filesystem::path& dir,
                      const DriverOptions& options = {});

/// Every sweep value in its own subdirectory <axis>_<value>, plus
/// sweep_summary.csv. Values run concurrently when OpenMP threads allow.
std::vector<RunSummary> run_sweep(const RunConfig& config, const std::filesystem::path& dir,
                                  const DriverOptions& options = {});

/// Runs a named preset into dir/<name>.
std::vector<RunSummary> run_preset(const std::string& name, const std::filesystem::path& dir,
                                   const DriverOptions& options = {});

}  // namespace superrad::cli
