// Copyright 2026 The reqlattice Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reqlattice::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 1,     // usage, parse or validation error
    kStrictFindings = 2,   // --strict and a conflict or contradiction-condition warning
    kIoFailure = 3,
};

/// Runs one command line (without the program name) and returns its exit
/// code. Reports go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reqlattice::cli
