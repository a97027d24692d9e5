#include "superrad/cli/output.hpp"

#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

#include "superrad/errors.hpp"

namespace superrad::cli {

namespace fs = std::filesystem;

namespace {

using OutFile = std::unique_ptr<std::FILE, void (*)(std::FILE*)>;

OutFile open_file(const fs::path& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return OutFile(f, [](std::FILE* p) { std::fclose(p); });
}

std::string plateau_fields(const Plateau& p) {
  return fmt::format("{},{},{}", format_number(p.value), format_number(p.spread),
                     p.stabilized ? "true" : "false");
}

}  // namespace

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

RunSummary summarize(const RunConfig& config, const RunResult& r) {
  RunSummary s;
  s.label = config.name;
  s.steps = r.steps;
  s.gain_denominator = r.gain_denominator;
  if (!r.energy.empty()) {
    s.initial_energy = r.energy.front();
    s.final_energy = r.energy.back();
  }
  for (const GainSeries& g : r.gains) {
    s.probes.push_back(g.probe);
    s.flux_plateaus.push_back(g.gain.empty() ? Plateau{} : detect_plateau(g.times, g.gain));
  }

  std::vector<double> zone_gain;
  if (!r.zone_energy.empty() && r.zone_energy.front() >= 1e-14) {
    zone_gain = gain_zone(r.zone_energy);
    s.has_zone = true;
    s.zone_plateau = detect_plateau(r.times, zone_gain);
  }

  const std::vector<double>* series = nullptr;
  const std::vector<double>* times = &r.times;
  HeadlineGain kind = config.headline;
  if (kind == HeadlineGain::automatic) {
    kind = !r.gains.empty() && !r.gains.front().gain.empty() ? HeadlineGain::flux : HeadlineGain::zone;
  }
  if (kind == HeadlineGain::flux && !r.gains.empty() && !r.gains.front().gain.empty()) {
    series = &r.gains.front().gain;
    times = &r.gains.front().times;
    s.headline = s.flux_plateaus.front();
    s.headline_kind = "flux";
  } else if (kind == HeadlineGain::zone && s.has_zone) {
    series = &zone_gain;
    s.headline = s.zone_plateau;
    s.headline_kind = "zone";
  } else {
    s.headline_kind = "none";
  }
  if (series != nullptr && times->size() >= 4) {
    const double t_end = times->back();
    s.headline_slope = least_squares_slope(*times, *series, 0.75 * t_end, t_end);
    s.unbounded = s.headline_slope > kUnboundedSlope;
  }
  return s;
}

void write_gain_csv(const fs::path& path, const RunResult& r) {
  OutFile f = open_file(path);
  const bool zone = !r.zone_energy.empty();
  std::vector<double> zone_gain;
  if (zone && r.zone_energy.front() >= 1e-14) {
    zone_gain = gain_zone(r.zone_energy);
  }
  std::string header = "t,energy";
  if (zone) {
    header += ",zone_energy";
    if (!zone_gain.empty()) {
      header += ",zone_gain";
    }
  }
  for (const GainSeries& g : r.gains) {
    header += fmt::format(",flux_{0},gain_{0}", format_number(g.probe));
  }
  fmt::print(f.get(), "{}\n", header);
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    std::string row = format_number(r.times[k]) + "," + format_number(r.energy[k]);
    if (zone) {
      row += "," + format_number(r.zone_energy[k]);
      if (!zone_gain.empty()) {
        row += "," + format_number(zone_gain[k]);
      }
    }
    for (const GainSeries& g : r.gains) {
      row += "," + format_number(g.flux[k]) + "," +
             (g.gain.empty() ? std::string("nan") : format_number(g.gain[k]));
    }
    fmt::print(f.get(), "{}\n", row);
  }
}

void write_summary(const fs::path& path, const RunSummary& s) {
  OutFile f = open_file(path);
  fmt::print(f.get(), "label = {}\n", s.label);
  if (!s.axis_value.empty()) {
    fmt::print(f.get(), "axis_value = {}\n", s.axis_value);
  }
  fmt::print(f.get(), "gain_kind = {}\n", s.headline_kind);
  fmt::print(f.get(), "G_inf = {}\n", format_number(s.headline.value));
  fmt::print(f.get(), "G_inf_spread = {}\n", format_number(s.headline.spread));
  fmt::print(f.get(), "stabilized = {}\n", s.headline.stabilized ? "true" : "false");
  fmt::print(f.get(), "last_quarter_slope = {}\n", format_number(s.headline_slope));
  fmt::print(f.get(), "unbounded = {}\n", s.unbounded ? "true" : "false");
  for (std::size_t k = 0; k < s.probes.size(); ++k) {
    fmt::print(f.get(), "flux_gain[{}] = {}\n", format_number(s.probes[k]),
               plateau_fields(s.flux_plateaus[k]));
  }
  if (s.has_zone) {
    fmt::print(f.get(), "zone_gain = {}\n", plateau_fields(s.zone_plateau));
  }
  fmt::print(f.get(), "gain_denominator = {}\n", format_number(s.gain_denominator));
  fmt::print(f.get(), "initial_energy = {}\n", format_number(s.initial_energy));
  fmt::print(f.get(), "final_energy = {}\n", format_number(s.final_energy));
  fmt::print(f.get(), "steps = {}\n", s.steps);
}

void write_sweep_summary(const fs::path& path, SweepAxis axis, const std::vector<RunSummary>& rows) {
  OutFile f = open_file(path);
  fmt::print(f.get(), "{},gain_kind,G_inf,stabilized,unbounded,wall_seconds\n", to_string(axis));
  for (const RunSummary& s : rows) {
    fmt::print(f.get(), "{},{},{},{},{},{:.3f}\n", s.axis_value, s.headline_kind,
               format_number(s.headline.value), s.headline.stabilized ? "true" : "false",
               s.unbounded ? "true" : "false", s.wall_seconds);
  }
}

void write_text(const fs::path& path, const std::string& text) {
  OutFile f = open_file(path);
  std::fputs(text.c_str(), f.get());
}

SnapshotWriter::SnapshotWriter(fs::path dir, const OutputOptions& options)
    : dir_(std::move(dir)), options_(options) {
  if (options_.snapshots) {
    fs::create_directories(dir_ / "snapshots");
    index_.reset(std::fopen((dir_ / "snapshots" / "index.csv").c_str(), "w"));
    if (!index_) {
      throw std::runtime_error("cannot write snapshot index in " + dir_.string());
    }
    fmt::print(index_.get(), "step,t,file\n");
  }
  if (options_.matrix) {
    matrix_.reset(std::fopen((dir_ / "amplitude.csv").c_str(), "w"));
    if (!matrix_) {
      throw std::runtime_error("cannot write amplitude matrix in " + dir_.string());
    }
  }
}

SnapshotWriter::~SnapshotWriter() = default;

void SnapshotWriter::on_snapshot(const Snapshot& snap) {
  const std::size_t stride = options_.x_stride;
  if (index_) {
    const std::string name = fmt::format("snap_{:08d}.csv", snap.step);
    OutFile f = open_file(dir_ / "snapshots" / name);
    fmt::print(f.get(), "x,re_u,im_u,abs_u\n");
    for (std::size_t j = 0; j < snap.x.size(); j += stride) {
      const Complex z = snap.u[j];
      fmt::print(f.get(), "{},{},{},{}\n", format_number(snap.x[j]), format_number(z.real()),
                 format_number(z.imag()), format_number(std::abs(z)));
    }
    fmt::print(index_.get(), "{},{},{}\n", snap.step, format_number(snap.t), name);
  }
  if (matrix_) {
    if (!matrix_header_) {
      std::string header = "t";
      for (std::size_t j = 0; j < snap.x.size(); j += stride) {
        header += "," + format_number(snap.x[j]);
      }
      fmt::print(matrix_.get(), "{}\n", header);
      matrix_header_ = true;
    }
    std::string row = format_number(snap.t);
    for (std::size_t j = 0; j < snap.x.size(); j += stride) {
      row += "," + format_number(std::abs(snap.u[j].real()));
    }
    fmt::print(matrix_.get(), "{}\n", row);
  }
}

}  // namespace superrad::cli
