// Copyright 2026 The gadgetc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * The gadgetc command-line driver as a callable function.
 *
 * Exit codes: 0 success, 1 thresholds failed, 2 parse error, 3 validation
 * error, 4 resource limit.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gadgetc::cli {

enum ExitCode : int {
    kOk = 0,
    kThresholdFailed = 1,
    kParseFailure = 2,
    kValidationFailure = 3,
    kResourceLimit = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace gadgetc::cli
