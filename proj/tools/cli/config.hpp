#pragma once

#include <span>
#include <stdexcept>

#include "json.hpp"
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/matrix.hpp"
#include "coxeter/types.hpp"

namespace coxwb {

/// A Coxeter matrix with generator names, as read from a preset or a JSON file.
struct SystemConfig {
  std::string name;
  std::vector<std::string> generators;
  coxeter::CoxeterMatrix matrix;

  coxeter::Generator generator(std::string_view name) const;
  /// Comma-separated generator names; empty text is the empty word.
  coxeter::Word parse_word(std::string_view text) const;
  coxeter::GenSet parse_subset(std::string_view text) const;

  nlohmann::json names(std::span<const coxeter::Generator> word) const;
  nlohmann::json names(coxeter::GenSet subset) const;
};

/// Thrown for malformed configs and unknown names; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Presets: A<n>, B<n>, D<n>, F4, H3, H4, I2(<m>) (m may be "inf"),
/// tilde-A2, G1.
SystemConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// {"generators": [...], "orders": [[1,"inf",3], ...]}; "name" is optional.
SystemConfig parse_system(const nlohmann::json& j, std::string fallback_name = "config");

/// A config file holds one system object or {"systems": [ ... ]}.
std::vector<SystemConfig> load_config_file(const std::string& path);

nlohmann::json to_json(const SystemConfig& config);

}  // namespace coxwb
