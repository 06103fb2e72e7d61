#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "flagdes/group.hpp"

namespace flagdes {

/// {"p": int, "d": int, "poly": [int,...]} with the modulus constant term first.
nlohmann::ordered_json field_to_json(const Field &f);
Field field_from_json(const nlohmann::json &j);

/// {"field": {...}, "dim": int, "generators": [{"label": str, "matrix": [[int]]}]}.
nlohmann::ordered_json group_to_json(const Group &g);
Group group_from_json(const nlohmann::json &j, long long cap = 1000000);
Group group_from_file(const std::string &path, long long cap = 1000000);

} // namespace flagdes
