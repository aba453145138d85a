#include <stdexcept>

#include "weylcells/sl_criteria.hpp"

namespace weylcells {

nlohmann::json JordanClass::to_json() const {
  nlohmann::json j;
  j["n_plus_1"] = n_plus_1_;
  j["eigen_data"] = nlohmann::json::array();
  for (const auto& e : eigen_data_) j["eigen_data"].push_back({{"label", e.label}, {"blocks", e.blocks}});
  if (values_) j["values"] = *values_;
  return j;
}

JordanClass JordanClass::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("JordanClass JSON must be an object");
    const auto& n = j.at("n_plus_1");
    if (!n.is_number_integer()) throw std::invalid_argument("n_plus_1 must be an integer");
    const auto& data = j.at("eigen_data");
    if (!data.is_array()) throw std::invalid_argument("eigen_data must be an array");
    std::vector<EigenBlocks> eigen;
    for (const auto& e : data) {
      if (!e.is_object()) throw std::invalid_argument("eigen_data entries must be objects");
      EigenBlocks b;
      const auto& label = e.at("label");
      // Numeric labels are accepted and kept as their decimal text.
      if (label.is_string()) {
        b.label = label.get<std::string>();
      } else if (label.is_number_integer()) {
        b.label = std::to_string(label.get<long long>());
      } else {
        throw std::invalid_argument("label must be a string");
      }
      const auto& blocks = e.at("blocks");
      if (!blocks.is_array()) throw std::invalid_argument("blocks must be an array");
      for (const auto& x : blocks) {
        if (!x.is_number_integer()) throw std::invalid_argument("blocks must be integers");
        b.blocks.push_back(x.get<int>());
      }
      eigen.push_back(std::move(b));
    }
    std::optional<std::map<std::string, int>> values;
    if (j.contains("values") && !j.at("values").is_null()) {
      const auto& v = j.at("values");
      if (!v.is_object()) throw std::invalid_argument("values must be an object");
      values.emplace();
      for (const auto& [label, x] : v.items()) {
        if (!x.is_number_integer()) throw std::invalid_argument("values must be integers");
        (*values)[label] = x.get<int>();
      }
    }
    return JordanClass(n.get<int>(), std::move(eigen), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JordanClass JSON: ") + e.what());
  }
}

}  // namespace weylcells
