// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_CLI_COMMANDS_H_
#define PWLMIP_CLI_COMMANDS_H_

#include <ostream>

namespace pwlmip::cli {

// Process exit codes; stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInput = 2,
  kExitInfeasible = 3,
  kExitFractional = 4,
  kExitGuard = 5,
};

// Entry point of the `pwlmip` tool:
//   pwlmip build <fn.json> --method M [--indicator V] [--out file.lp]
//   pwlmip solve <fn.json> --method M [--sense max|min] [--n N]
//                [--fix-x X] [--indicator V] [--json]
//   pwlmip check-ideality <fn.json> --method M [--indicator V] [--a0 A]
//   pwlmip bench table1|table2 [--sizes 1000,5000] [--pretty]
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace pwlmip::cli

#endif  // PWLMIP_CLI_COMMANDS_H_
