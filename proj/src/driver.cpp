#include "superrad/cli/driver.hpp"

#include <chrono>
#include <exception>
#include <fmt/format.h>

#include "superrad/cli/presets.hpp"
#include "superrad/errors.hpp"

namespace superrad::cli {

namespace fs = std::filesystem;

namespace {

void report(const DriverOptions& options, const RunSummary& s) {
  if (options.quiet) {
    return;
  }
  const std::string tag = s.axis_value.empty() ? s.label : s.label + " [" + s.axis_value + "]";
  if (s.headline_kind == "none") {
    fmt::print(stderr, "{}: {} steps, {:.1f} s\n", tag, s.steps, s.wall_seconds);
    return;
  }
  fmt::print(stderr, "{}: G_inf ({}) = {:.6f}{}{}, {:.1f} s\n", tag, s.headline_kind, s.headline.value,
             s.headline.stabilized ? ", stabilized" : ", not stabilized",
             s.unbounded ? ", unbounded" : "", s.wall_seconds);
}

RunSummary execute(const RunConfig& config, const fs::path& dir) {
  fs::create_directories(dir);
  write_text(dir / "config.ini", serialize(config));
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  if (config.sim.snapshot_stride > 0 && (config.output.snapshots || config.output.matrix)) {
    SnapshotWriter writer(dir, config.output);
    result = run(config.sim, &writer);
  } else {
    result = run(config.sim);
  }
  RunSummary s = summarize(config, result);
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_gain_csv(dir / "gain.csv", result);
  write_summary(dir / "summary.txt", s);
  return s;
}

}  // namespace

RunSummary run_config(const RunConfig& config, const fs::path& dir, const DriverOptions& options) {
  if (config.sweep) {
    throw ValidationError("sweep", "config has a [sweep] section; use the sweep verb");
  }
  RunSummary s = execute(config, dir);
  report(options, s);
  return s;
}

std::vector<RunSummary> run_sweep(const RunConfig& config, const fs::path& dir,
                                  const DriverOptions& options) {
  if (!config.sweep) {
    throw ValidationError("sweep", "config has no [sweep] section");
  }
  const SweepSpec& sweep = *config.sweep;
  std::vector<RunConfig> runs;
  for (const std::string& value : sweep.values) {
    runs.push_back(apply_sweep_value(config, sweep.axis, value));
  }
  fs::create_directories(dir);
  write_text(dir / "config.ini", serialize(config));

  const auto count = static_cast<std::ptrdiff_t>(runs.size());
  std::vector<RunSummary> rows(runs.size());
  std::vector<std::exception_ptr> errors(runs.size());
  // Runs share nothing mutable; nested kernel regions run on one thread here.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      const std::string sub = to_string(sweep.axis) + "_" + sweep.values[i];
      rows[i] = execute(runs[i], dir / sub);
      rows[i].axis_value = sweep.values[i];
      report(options, rows[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  write_sweep_summary(dir / "sweep_summary.csv", sweep.axis, rows);
  return rows;
}

std::vector<RunSummary> run_preset(const std::string& name, const fs::path& dir,
                                   const DriverOptions& options) {
  const Preset& preset = find_preset(name);
  if (preset.config.sweep) {
    return run_sweep(preset.config, dir / preset.name, options);
  }
  return {run_config(preset.config, dir / preset.name, options)};
}

}  // namespace superrad::cli
