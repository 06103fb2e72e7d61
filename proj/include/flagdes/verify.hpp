#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "flagdes/constructions.hpp"

namespace flagdes {

struct CheckRow {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct TargetReport {
  std::string id;
  bool pass = false;
  std::vector<CheckRow> checks;
  nlohmann::ordered_json details; // params, orbit lengths, shape, fingerprint digest
  std::string text() const;
  nlohmann::ordered_json to_json() const;
};

/// Full verification of one catalog instance: flag check, both lambda paths,
/// parameter comparison, orbit data, stabilizer orders, shape report, and the
/// per-instance extra checks.
TargetReport verify_instance_target(const ExampleInstance &inst);
TargetReport verify_table2_target(int line);
TargetReport verify_sl25_target();
TargetReport verify_filters_target();

/// target id: catalog instance id, "table2-lineN", "sl25-subspace-orbits", "filters".
TargetReport verify_target(const std::string &id);
std::vector<std::string> all_target_ids();

struct RunReport {
  std::vector<TargetReport> targets;
  bool all_pass() const;
  std::string text() const;
  nlohmann::ordered_json to_json() const;
};

RunReport verify_all();

} // namespace flagdes
