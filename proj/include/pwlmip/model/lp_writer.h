// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_MODEL_LP_WRITER_H_
#define PWLMIP_MODEL_LP_WRITER_H_

#include <ostream>
#include <string>

#include "pwlmip/model/model.h"

namespace pwlmip {

// Writes the model in CPLEX LP text format. Output is deterministic:
// variables in insertion order, coefficients with 17 significant digits,
// unnamed variables as v<index> and unnamed rows as c<index>.
void write_lp(const Model& model, std::ostream& out);
std::string export_lp_text(const Model& model);

}  // namespace pwlmip

#endif  // PWLMIP_MODEL_LP_WRITER_H_
