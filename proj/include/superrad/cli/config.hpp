#pragma once

// INI-style run configuration. One section per module:
//
//   [run]          name
//   [model]        kind = toy | uniform | reissner_nordstrom
//   [toy]          alpha, beta, width
//   [uniform]      V, P
//   [black_hole]   mass, charge, tortoise_offset
//   [field]        charge, mass, angular_momentum
//   [grid]         x_min, x_max, h, dt, final_time
//   [solver]       boundary, closure, splitting, execution
//   [data]         kind, omega, center, width, phase, strict_support
//   [diagnostics]  probes, zone_start, normalization, gain
//   [output]       snapshot_stride, x_stride, snapshots, matrix
//   [sweep]        axis, values            (optional)
//
// Lists are whitespace separated. Unknown sections or keys are rejected.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superrad/solver.hpp"

namespace superrad::cli {

/// Which gain the summary reports as G_inf.
enum class HeadlineGain {
  automatic,  ///< flux at the first probe if any, zone gain otherwise
  flux,
  zone,
};

struct OutputOptions {
  bool snapshots = true;
  bool matrix = true;
  /// Keep every x_stride-th node in snapshot and matrix files.
  std::size_t x_stride = 1;
};

enum class SweepAxis { omega, width, mass, charge, probe, boundary };

struct SweepSpec {
  SweepAxis axis = SweepAxis::omega;
  std::vector<std::string> values;  ///< as written; parsed per axis
};

struct RunConfig {
  std::string name = "run";
  SimConfig sim;
  HeadlineGain headline = HeadlineGain::automatic;
  OutputOptions output;
  std::optional<SweepSpec> sweep;
};

/// Throws ValidationError (field = "section.key") on malformed input.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Writes every field; parse_config(serialize(c)) reproduces c exactly.
std::string serialize(const RunConfig& config);

/// The base config with the sweep axis set to `value`, sweep section removed.
RunConfig apply_sweep_value(const RunConfig& base, SweepAxis axis, const std::string& value);

std::string to_string(SweepAxis axis);
std::string to_string(BoundaryMode mode);

}  // namespace superrad::cli
