// superrad: run, sweep and reproduce superradiance simulations.
//
//   superrad run <config.ini>        single run
//   superrad sweep <config.ini>      one run per [sweep] value
//   superrad repro <preset>          built-in figure / table presets
//   superrad list-presets
//   superrad show-preset <preset>    print a preset as INI
//
// Exit codes: 0 ok, 2 invalid input, 3 numerical failure, 1 anything else.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <iostream>

#ifdef SUPERRAD_HAVE_OPENMP
#include <omp.h>
#endif

#include "superrad/cli/config.hpp"
#include "superrad/cli/driver.hpp"
#include "superrad/cli/presets.hpp"
#include "superrad/errors.hpp"

namespace cli = superrad::cli;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Charge-induced superradiance simulator"};
  app.require_subcommand(1);

  std::string out_dir = "out";
  int threads = 0;
  bool quiet = false;
  app.add_option("-o,--output-dir", out_dir, "where results are written")->capture_default_str();
  app.add_option("-t,--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("-q,--quiet", quiet, "no progress lines on stderr");

  std::string config_path;
  std::string preset_name;
  auto* run_cmd = app.add_subcommand("run", "run a single configuration");
  run_cmd->add_option("config", config_path, "INI file")->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "run every value of the [sweep] section");
  sweep_cmd->add_option("config", config_path, "INI file")->required();
  auto* repro_cmd = app.add_subcommand("repro", "run a built-in preset into <output-dir>/<preset>");
  repro_cmd->add_option("preset", preset_name, "preset name, or 'all'")->required();
  auto* list_cmd = app.add_subcommand("list-presets", "list the built-in presets");
  auto* show_cmd = app.add_subcommand("show-preset", "print a preset's configuration");
  show_cmd->add_option("preset", preset_name)->required();

  CLI11_PARSE(app, argc, argv);

#ifdef SUPERRAD_HAVE_OPENMP
  if (threads > 0) {
    omp_set_num_threads(threads);
  }
#endif
  const cli::DriverOptions options{quiet};

  try {
    if (*list_cmd) {
      for (const cli::Preset& p : cli::presets()) {
        fmt::print("{:<15} {}\n", p.name, p.description);
      }
    } else if (*show_cmd) {
      std::cout << cli::serialize(cli::find_preset(preset_name).config);
    } else if (*run_cmd) {
      const cli::RunConfig config = cli::load_config(config_path);
      cli::run_config(config, fs::path(out_dir) / config.name, options);
    } else if (*sweep_cmd) {
      const cli::RunConfig config = cli::load_config(config_path);
      cli::run_sweep(config, fs::path(out_dir) / config.name, options);
    } else if (*repro_cmd) {
      if (preset_name == "all") {
        for (const cli::Preset& p : cli::presets()) {
          cli::run_preset(p.name, out_dir, options);
        }
      } else {
        cli::run_preset(preset_name, out_dir, options);
      }
    }
  } catch (const superrad::ValidationError& e) {
    fmt::print(stderr, "invalid input: {}\n", e.what());
    return 2;
  } catch (const superrad::NumericalError& e) {
    fmt::print(stderr, "numerical failure: {}\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
