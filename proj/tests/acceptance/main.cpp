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

#include <iostream>

#include "bax_app/suite.hpp"

int main() {
    const auto results = bax::app::run_acceptance_suite(std::cerr);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << bax::app::format_result(r) << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << (results.size() - failed) << '/' << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
