#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lrw/json_io.hpp"

namespace lrw {

enum class VerifyLevel { quick, full };

VerifyLevel parse_verify_level(std::string_view text);
std::string_view to_string(VerifyLevel level);

struct VerifyCheck {
  std::string name;
  bool passed;
  json expected;
  json actual;
};

struct VerifyReport {
  VerifyLevel level;
  std::vector<VerifyCheck> checks;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  json to_json() const;
};

/// Settings read from a JSON configuration file. Missing keys and an empty
/// file both leave the defaults in place.
struct VerifyConfig {
  VerifyLevel level = VerifyLevel::quick;
  int max_boxes = 10;
};

VerifyConfig parse_verify_config(std::string_view text);

/// Worked examples at quick level; full adds the exhaustive property sweeps.
/// Checks run concurrently but the report order is fixed.
VerifyReport run_verify_suite(VerifyLevel level);

}  // namespace lrw
