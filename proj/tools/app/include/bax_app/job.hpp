/*
   Copyright 2026 The bax Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bax_app/io.hpp"

namespace bax::app {

enum class Command { taft, uqsl2, double_, baxterize, verify, all_regressions };
enum class Format { json, latex, text };

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Invalid or inconsistent command-line configuration.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    Command command = Command::taft;
    int N = 4;
    int n = 3;
    int l = 1;
    int q_power = 1;                   // q = z^q_power, z = exp(2 pi i / N)
    std::optional<std::string> alpha;  // selects the indecomposable representation
    std::string spin = "1/2";
    bool parametric = false;
    Format format = Format::json;
    bool verify = false;
    std::string input;
    std::string output;  // empty: standard output unless BAX_OUT_DIR is set
    bool spin_given = false;  // baxterize: the U_q[sl(2)] series instead of the Taft algebra
};

Command parse_command(const std::string& name);
Format parse_format(const std::string& name);
const char* to_string(Command c);

/// Throws UsageError.
void validate(const JobConfig& config);

/// Resolves the artifact destination: an explicit relative path and the
/// default file name are placed under BAX_OUT_DIR when it is set. Empty means
/// standard output.
std::string resolve_output(const JobConfig& config, const std::string& default_name);

/// The R-matrix a taft or uqsl2 job emits.
MatrixDocument build_matrix(const JobConfig& config);

/// Runs one job. Artifacts go to the resolved output; verification reports go
/// to `out` when the artifact went to a file and to `err` otherwise. Returns
/// an ExitCode.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bax::app
