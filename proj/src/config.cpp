#include "cww/config.hpp"

#include <fstream>
#include <stdexcept>

namespace cww {

Config Config::from_map(const std::map<std::string, std::string>& kv) {
  Config cfg;
  for (const auto& [key, value] : kv) {
    try {
      if (key == "grid_resolution") {
        cfg.grid_resolution = std::stoi(value);
      } else if (key == "pc_levels") {
        cfg.pc_levels = std::stoi(value);
      } else if (key == "symbolic_cap") {
        cfg.symbolic_cap = std::stoi(value);
      } else if (key == "sm_pairing") {
        if (value == "literal") {
          cfg.sm_pairing = SmPairing::Literal;
        } else if (value == "attached") {
          cfg.sm_pairing = SmPairing::Attached;
        } else {
          throw std::invalid_argument("sm_pairing must be literal or attached");
        }
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "golden_agreement_threshold") {
        cfg.golden_agreement_threshold = std::stod(value);
      } else if (key == "centroid_tolerance") {
        cfg.centroid_tolerance = std::stod(value);
      } else if (key == "power_tolerance") {
        cfg.power_tolerance = std::stod(value);
      } else if (key == "satisfaction_tolerance") {
        cfg.satisfaction_tolerance = std::stod(value);
      } else if (key == "fuzziness_tolerance_pp") {
        cfg.fuzziness_tolerance_pp = std::stod(value);
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value for config key " + key + ": '" +
                                  value + "'");
    }
  }
  return cfg;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line without '=': " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return Config::from_map(kv);
}

}  // namespace cww
