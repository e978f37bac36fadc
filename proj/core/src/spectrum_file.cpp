#include <cmath>
#include <fstream>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "thermogeom/gibbs.hpp"

namespace thermogeom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SpectrumFormatError("spectrum file: " + where + ": " + what);
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) {
      fail(where + "." + item.key(), "unknown field");
    }
  }
}

double finite_number(const json& value, const std::string& where) {
  if (!value.is_number()) fail(where, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(where, "value is not finite");
  return x;
}

}  // namespace

GibbsFamily from_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SpectrumFormatError("spectrum file: cannot open '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpectrumFormatError(std::string("spectrum file: ") + e.what());
  }

  if (!doc.is_object()) fail("top level", "expected an object");
  reject_unknown_fields(doc, {"levels", "observables"}, "top level");
  if (!doc.contains("levels") || !doc["levels"].is_array() || doc["levels"].empty()) {
    fail("levels", "required non-empty array");
  }

  const auto& levels = doc["levels"];
  const Eigen::Index k = static_cast<Eigen::Index>(levels.size());
  Vector energies(k);
  Vector weights(k);
  std::vector<std::uint64_t> mult(static_cast<std::size_t>(k), 1);
  std::vector<std::string> labels;
  bool any_label = false;
  std::unordered_set<std::string> seen_labels;

  for (Eigen::Index i = 0; i < k; ++i) {
    const std::string where = "levels[" + std::to_string(i) + "]";
    const json& lv = levels[static_cast<std::size_t>(i)];
    if (!lv.is_object()) fail(where, "expected an object");
    reject_unknown_fields(lv, {"label", "energy", "multiplicity", "base_weight"}, where);
    if (!lv.contains("energy")) fail(where + ".energy", "required");
    energies[i] = finite_number(lv["energy"], where + ".energy");

    weights[i] = 1.0;
    if (lv.contains("base_weight")) {
      weights[i] = finite_number(lv["base_weight"], where + ".base_weight");
      if (!(weights[i] > 0.0)) fail(where + ".base_weight", "must be positive");
    }
    if (lv.contains("multiplicity")) {
      const json& m = lv["multiplicity"];
      if (!m.is_number_unsigned() || m.get<std::uint64_t>() < 1) {
        fail(where + ".multiplicity", "must be a positive integer");
      }
      mult[static_cast<std::size_t>(i)] = m.get<std::uint64_t>();
    }
    std::string label;
    if (lv.contains("label")) {
      if (!lv["label"].is_string()) fail(where + ".label", "expected a string");
      label = lv["label"].get<std::string>();
      any_label = true;
      if (!label.empty() && !seen_labels.insert(label).second) {
        fail(where + ".label", "duplicate label '" + label + "'");
      }
    }
    labels.push_back(std::move(label));
  }
  if (!any_label) labels.clear();

  std::vector<Vector> hamiltonians{std::move(energies)};
  if (doc.contains("observables")) {
    if (!doc["observables"].is_array()) fail("observables", "expected an array");
    std::unordered_set<std::string> seen_names;
    Eigen::Index idx = 0;
    for (const json& obs : doc["observables"]) {
      const std::string where = "observables[" + std::to_string(idx++) + "]";
      if (!obs.is_object()) fail(where, "expected an object");
      reject_unknown_fields(obs, {"name", "values"}, where);
      if (!obs.contains("name") || !obs["name"].is_string()) {
        fail(where + ".name", "required string");
      }
      if (!seen_names.insert(obs["name"].get<std::string>()).second) {
        fail(where + ".name", "duplicate observable name");
      }
      if (!obs.contains("values") || !obs["values"].is_array() ||
          static_cast<Eigen::Index>(obs["values"].size()) != k) {
        fail(where + ".values", "required array matching the number of levels");
      }
      Vector v(k);
      for (Eigen::Index i = 0; i < k; ++i) {
        v[i] = finite_number(obs["values"][static_cast<std::size_t>(i)],
                             where + ".values[" + std::to_string(i) + "]");
      }
      hamiltonians.push_back(std::move(v));
    }
  }

  return GibbsFamily(std::move(hamiltonians), std::move(weights), std::move(mult),
                     std::move(labels));
}

}  // namespace thermogeom
