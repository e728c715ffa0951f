#pragma once

#include "smot/coupling.hpp"
#include "smot/measure.hpp"
#include "smot/rational.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace smot {

struct Instance {
  DiscreteMeasure mu;
  DiscreteMeasure nu;
};

nlohmann::json measure_to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

// Instance files: {"mu": [{"x": "1/2", "w": "0.25"}, ...], "nu": [...]}.
// Rational strings "p/q" and finite decimals are parsed exactly.
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);

nlohmann::json coupling_to_json(const Coupling& c);

}  // namespace smot
