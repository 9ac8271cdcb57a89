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

#include <ostream>
#include <string>
#include <vector>

namespace bax::app {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    double limit_seconds = 0;  // 0: no time limit
    std::string detail;
};

/// One pass/fail line, e.g. "[PASS] 4 parametric YBE identities (0.02 s, limit 120 s): ...".
std::string format_result(const CriterionResult& r);

/// Runs every acceptance criterion in order; each line is written to `log` as
/// soon as its criterion finishes.
std::vector<CriterionResult> run_acceptance_suite(std::ostream& log);

}  // namespace bax::app
