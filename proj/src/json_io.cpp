#include "bex/json_io.hpp"

namespace bex {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(key, "missing");
  return j.at(key);
}

}  // namespace

double exponent_from_json(const json& j, const std::string& key) {
  const json& v = require(j, key);
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInfExponent;
    throw ConfigError(key, "expected a number >= 1 or \"inf\"");
  }
  if (!v.is_number()) throw ConfigError(key, "expected a number >= 1 or \"inf\"");
  const double p = v.get<double>();
  if (!(p >= 1.0)) throw ConfigError(key, "exponent must satisfy p >= 1");
  return p;
}

json exponent_to_json(double p) {
  if (is_inf(p)) return json("inf");
  return json(p);
}

json to_json(const MeasureSpace& space) { return json{{"weights", space.weights()}}; }

MeasureSpace measure_space_from_json(const json& j) {
  const json& w = require(j, "weights");
  if (!w.is_array() || w.empty()) throw ConfigError("weights", "expected a nonempty array");
  try {
    return MeasureSpace(w.get<Vec>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("weights", e.what());
  }
}

json to_json(const Partition& P) { return json{{"blocks", P.blocks()}}; }

Partition partition_from_json(const json& j, const MeasureSpace& space) {
  const json& b = require(j, "blocks");
  if (!b.is_array()) throw ConfigError("blocks", "expected an array of index arrays");
  try {
    return Partition(b.get<std::vector<std::vector<std::size_t>>>(), space);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("blocks", e.what());
  } catch (const json::exception&) {
    throw ConfigError("blocks", "expected an array of index arrays");
  }
}

json to_json(const FunctionSpace& E) {
  return json{{"kind", "Lp"}, {"p", exponent_to_json(E.p())}, {"weights", E.space().weights()}};
}

FunctionSpace function_space_from_json(const json& j) {
  if (j.contains("kind") && j.at("kind") != "Lp") throw ConfigError("kind", "only \"Lp\" is supported");
  return FunctionSpace(measure_space_from_json(j), exponent_from_json(j, "p"));
}

json to_json(const FiniteBanachSpace& Y) {
  return json{{"kind", "lp"}, {"p", exponent_to_json(Y.p())}, {"dim", Y.dim()}};
}

FiniteBanachSpace banach_space_from_json(const json& j) {
  if (j.contains("kind") && j.at("kind") != "lp") throw ConfigError("kind", "only \"lp\" is supported");
  const json& d = require(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
    throw ConfigError("dim", "expected a positive integer");
  return FiniteBanachSpace(d.get<std::size_t>(), exponent_from_json(j, "p"));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return json{{"matrix", rows}};
}

Matrix matrix_from_json(const json& j) {
  const json& rows = j.is_array() ? j : require(j, "matrix");
  if (!rows.is_array() || rows.empty()) throw ConfigError("matrix", "expected a nonempty 2-d array");
  Matrix m(rows.size(), rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || row.size() != m.cols())
      throw ConfigError("matrix", "ragged or non-array row");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!row.at(c).is_number()) throw ConfigError("matrix", "non-numeric entry");
      m(r, c) = row.at(c).get<double>();
    }
  }
  return m;
}

json to_json(const NormEstimate& est) {
  return json{{"value", est.value}, {"witness", est.witness}, {"exact", est.exact}};
}

}  // namespace bex
