// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_CLI_HPP_
#define CONFALG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace confalg::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one verb. `args` excludes the program name. Writes a single JSON
/// document plus newline to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confalg::cli

#endif  // CONFALG_CLI_HPP_
