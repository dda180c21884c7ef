// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_PWL_PWL_JSON_H_
#define PWLMIP_PWL_PWL_JSON_H_

#include <filesystem>

#include "json.hpp"
#include "pwlmip/pwl/pwl_function.h"

namespace pwlmip {

// On-disk form:
//   {"breakpoints": [...], "slopes": [...], "intercepts": [...],
//    "continuity": "continuous" | "right" | "left"}
// "right"/"left" data that turns out to be continuous is classified as
// continuous. Schema violations throw InputError.
PwlFunction pwl_from_json(const nlohmann::json& j);
nlohmann::json pwl_to_json(const PwlFunction& f);

PwlFunction load_pwl(const std::filesystem::path& path);

}  // namespace pwlmip

#endif  // PWLMIP_PWL_PWL_JSON_H_
