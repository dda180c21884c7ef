// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/pwl/pwl_json.h"

#include <fstream>
#include <string>
#include <vector>

#include "pwlmip/errors.h"

namespace pwlmip {
namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  const auto& arr = j.at(key);
  if (!arr.is_array()) {
    throw InputError(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw InputError(std::string("field \"") + key +
                       "\" must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

PwlFunction pwl_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("PWL function JSON must be an object");
  auto breakpoints = number_array(j, "breakpoints");
  auto slopes = number_array(j, "slopes");
  auto intercepts = number_array(j, "intercepts");
  if (!j.contains("continuity") || !j.at("continuity").is_string()) {
    throw InputError("field \"continuity\" must be a string");
  }
  const auto tag = j.at("continuity").get<std::string>();
  if (tag == "continuous") {
    return PwlFunction(std::move(breakpoints), std::move(slopes),
                       std::move(intercepts), Continuity::kContinuous);
  }
  std::optional<Convention> convention;
  if (tag == "right") {
    convention = Convention::kRight;
  } else if (tag == "left") {
    convention = Convention::kLeft;
  } else {
    throw InputError("continuity must be \"continuous\", \"right\" or \"left\"");
  }
  try {
    return classify(std::move(breakpoints), std::move(slopes),
                    std::move(intercepts), convention);
  } catch (const UnsupportedFunctionError& e) {
    throw InputError(e.what());
  }
}

nlohmann::json pwl_to_json(const PwlFunction& f) {
  nlohmann::json j;
  j["breakpoints"] = std::vector<double>(f.breakpoints().begin(),
                                         f.breakpoints().end());
  j["slopes"] = std::vector<double>(f.slopes().begin(), f.slopes().end());
  j["intercepts"] =
      std::vector<double>(f.intercepts().begin(), f.intercepts().end());
  j["continuity"] = std::string(to_string(f.continuity()));
  return j;
}

PwlFunction load_pwl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return pwl_from_json(j);
}

}  // namespace pwlmip
