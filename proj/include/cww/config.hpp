#pragma once

#include <map>
#include <string>

#include "cww/engines.hpp"

namespace cww {

/// Runtime knobs of the harness, loadable from a key=value file.
struct Config {
  int grid_resolution = kDefaultResolution;
  int pc_levels = 201;
  int symbolic_cap = kSymbolicCap;
  SmPairing sm_pairing = SmPairing::Literal;
  std::uint64_t seed = 1;
  double golden_agreement_threshold = 0.90;  // criterion for exit code 3
  double centroid_tolerance = 0.3;
  double power_tolerance = 0.05;
  double satisfaction_tolerance = 0.05;
  double fuzziness_tolerance_pp = 5.0;  // percentage points

  static Config from_file(const std::string& path);
  static Config from_map(const std::map<std::string, std::string>& kv);
};

}  // namespace cww
