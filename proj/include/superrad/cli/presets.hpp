#pragma once

#include <string>
#include <vector>

#include "superrad/cli/config.hpp"

namespace superrad::cli {

struct Preset {
  std::string name;
  std::string description;
  RunConfig config;  ///< may carry a sweep
};

const std::vector<Preset>& presets();

/// Throws ValidationError("preset", ...) for unknown names.
const Preset& find_preset(const std::string& name);

}  // namespace superrad::cli
