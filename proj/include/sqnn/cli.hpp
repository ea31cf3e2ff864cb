// Copyright 2026 The SQNN Authors.

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
 * @file cli.hpp
 * The `sqnn` command-line tool.
 */
#pragma once

#include <iosfwd>

namespace sqnn::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kConfigError = 2,
    kDataError = 3,
    kCheckpointError = 4,
    kGradcheckFailed = 5,
};

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace sqnn::cli
