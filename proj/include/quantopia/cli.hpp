//  Copyright 2026 The Quantopia Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef QUANTOPIA_CLI_HPP_
#define QUANTOPIA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace quantopia {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
};

/// Runs one command line (without the program name). The report goes to out,
/// diagnostics to err. Reads QUANTOPIA_CAP from the environment when --cap is
/// not given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quantopia

#endif  // QUANTOPIA_CLI_HPP_
