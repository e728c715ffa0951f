#include "smot/io.hpp"

#include <fstream>
#include <stdexcept>

namespace smot {

using nlohmann::json;

json measure_to_json(const DiscreteMeasure& m) {
  json arr = json::array();
  for (const auto& a : m.atoms()) {
    arr.push_back({{"x", to_string(a.x)}, {"w", to_string(a.w)}});
  }
  return arr;
}

DiscreteMeasure measure_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("measure must be a JSON array of atoms");
  std::vector<Atom> atoms;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("x") || !e.contains("w")) {
      throw std::invalid_argument("atom must be an object with fields x and w");
    }
    atoms.push_back({parse_rational(e.at("x").get<std::string>()),
                     parse_rational(e.at("w").get<std::string>())});
  }
  return DiscreteMeasure(std::move(atoms));
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("nu")) {
    throw std::invalid_argument("instance must be an object with fields mu and nu");
  }
  return {measure_from_json(j.at("mu")), measure_from_json(j.at("nu"))};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

json coupling_to_json(const Coupling& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"x", to_string(r.x)},
                    {"w", to_string(r.w)},
                    {"conditional", measure_to_json(r.conditional)}});
  }
  return {{"rows", rows}};
}

}  // namespace smot
