// SPDX-License-Identifier: Apache-2.0
//
// widebeam: array-factor beam widening and patch antenna radiation models
// Copyright (C) 2026 The widebeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace widebeam::cli {

/// Process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_input_error = 1,
    exit_tolerance = 2,
};

/// Run the command line `args` (without the program name). Data goes to files under
/// --output-dir; diagnostics and help text go to `diag`.
int run(const std::vector<std::string> &args, std::ostream &diag);

} // namespace widebeam::cli
