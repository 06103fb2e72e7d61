#include "flagdes/io.hpp"

#include <fstream>

namespace flagdes {

nlohmann::ordered_json field_to_json(const Field &f) {
  nlohmann::ordered_json j;
  j["p"] = f.p();
  j["d"] = f.d();
  j["poly"] = std::vector<int>(f.poly().begin(), f.poly().end());
  return j;
}

Field field_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("d"))
    fail(Err::BadInput, "field object needs p and d");
  int p = j["p"].get<int>(), d = j["d"].get<int>();
  if (j.contains("poly")) return Field::create(p, d, j["poly"].get<std::vector<int>>());
  return Field::create(p, d);
}

nlohmann::ordered_json group_to_json(const Group &g) {
  nlohmann::ordered_json j;
  j["field"] = {{"p", g.p}, {"d", 1}, {"poly", {0, 1}}};
  j["dim"] = g.n;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto &[label, m] : g.gens) {
    nlohmann::ordered_json gj;
    gj["label"] = label;
    std::vector<std::vector<int>> rows(m.n, std::vector<int>(m.n));
    for (int i = 0; i < m.n; ++i)
      for (int k = 0; k < m.n; ++k) rows[i][k] = m.at(i, k);
    gj["matrix"] = rows;
    gens.push_back(gj);
  }
  j["generators"] = gens;
  return j;
}

Group group_from_json(const nlohmann::json &j, long long cap) {
  if (!j.is_object() || !j.contains("field") || !j.contains("dim") || !j.contains("generators"))
    fail(Err::BadInput, "group object needs field, dim and generators");
  Field f = field_from_json(j["field"]);
  if (f.d() != 1) fail(Err::BadInput, "group matrices must be over a prime field");
  int n = j["dim"].get<int>();
  std::vector<std::pair<std::string, Mat>> gens;
  for (const auto &gj : j["generators"]) {
    if (!gj.contains("matrix")) fail(Err::BadInput, "generator needs a matrix");
    auto rows = gj["matrix"].get<std::vector<std::vector<int>>>();
    if ((int)rows.size() != n) fail(Err::BadInput, "generator matrix has wrong dimension");
    gens.push_back({gj.value("label", "g"), mat_from_rows(f.p(), rows)});
  }
  if (gens.empty()) fail(Err::BadInput, "group needs at least one generator");
  return closure(std::move(gens), cap);
}

Group group_from_file(const std::string &path, long long cap) {
  std::ifstream in(path);
  if (!in) fail(Err::BadInput, "cannot open group file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception &e) {
    fail(Err::BadInput, std::string("bad group JSON: ") + e.what());
  }
  return group_from_json(j, cap);
}

} // namespace flagdes
