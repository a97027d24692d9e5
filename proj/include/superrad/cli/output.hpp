#pragma once

// Deterministic writers. Every floating-point value is printed with 17
// significant digits, so identical runs give byte-identical files.

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "superrad/cli/config.hpp"
#include "superrad/solver.hpp"

namespace superrad::cli {

/// Late-time figures of merit for one run.
struct RunSummary {
  std::string label;
  std::string axis_value;  ///< sweep value, empty for single runs
  std::vector<double> probes;
  std::vector<Plateau> flux_plateaus;  ///< one per probe
  bool has_zone = false;
  Plateau zone_plateau;
  Plateau headline;              ///< G_inf as selected by [diagnostics] gain
  std::string headline_kind;     ///< "flux", "zone" or "none"
  double headline_slope = 0.0;   ///< LS slope of the headline gain over the last quarter
  bool unbounded = false;        ///< last-quarter slope above kUnboundedSlope
  double initial_energy = 0.0;
  double final_energy = 0.0;
  double gain_denominator = 0.0;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
};

/// A headline gain still rising faster than this per unit time over the last
/// quarter of the run is flagged as unbounded (hyperradiance).
inline constexpr double kUnboundedSlope = 1e-2;

RunSummary summarize(const RunConfig& config, const RunResult& result);

std::string format_number(double x);

/// t, energy[, zone_energy, zone_gain], then flux_R and gain_R per probe.
void write_gain_csv(const std::filesystem::path& path, const RunResult& result);

void write_summary(const std::filesystem::path& path, const RunSummary& s);

/// One row per sweep value: axis value, G_inf, stabilized, unbounded, wall time.
void write_sweep_summary(const std::filesystem::path& path, SweepAxis axis,
                         const std::vector<RunSummary>& rows);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Observer writing snapshot CSVs (x, Re u, Im u, |u|) plus index.csv, and the
/// |Re phi| matrix (rows = snapshot times, columns = x) to amplitude.csv.
class SnapshotWriter : public TrajectoryObserver {
 public:
  SnapshotWriter(std::filesystem::path dir, const OutputOptions& options);
  ~SnapshotWriter() override;
  SnapshotWriter(const SnapshotWriter&) = delete;
  SnapshotWriter& operator=(const SnapshotWriter&) = delete;

  void on_snapshot(const Snapshot& snapshot) override;

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
      if (f != nullptr) {
        std::fclose(f);
      }
    }
  };
  using File = std::unique_ptr<std::FILE, FileCloser>;

  std::filesystem::path dir_;
  OutputOptions options_;
  File index_;
  File matrix_;
  bool matrix_header_ = false;
};

}  // namespace superrad::cli
