#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bex/duality.hpp"
#include "bex/measure.hpp"
#include "bex/operator.hpp"

namespace bex {

// Malformed configuration; carries the offending key for diagnostics.
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what), key_(key) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

nlohmann::json to_json(const MeasureSpace& space);          // {"weights":[...]}
MeasureSpace measure_space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& P);                 // {"blocks":[[...],[...]]}
Partition partition_from_json(const nlohmann::json& j, const MeasureSpace& space);

nlohmann::json to_json(const FunctionSpace& E);             // {"kind":"Lp","p":2.0|"inf","weights":[...]}
FunctionSpace function_space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiniteBanachSpace& Y);         // {"kind":"lp","p":...,"dim":...}
FiniteBanachSpace banach_space_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);             // {"matrix":[[...]]}
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NormEstimate& est);            // {"value":...,"witness":[...],"exact":...}

double exponent_from_json(const nlohmann::json& j, const std::string& key);
nlohmann::json exponent_to_json(double p);

}  // namespace bex
