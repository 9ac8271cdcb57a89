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

#include "bax_app/fixtures.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace bax::app {
namespace {

using Entry = std::tuple<int, int, std::string>;

ParamMatrix build(std::size_t dim, const std::vector<Entry>& entries, const Field& field) {
    ParamMatrix m(dim, dim);
    for (const auto& [r, c, text] : entries) m.set(r - 1, c - 1, parse_param_scalar(text, field));
    return m;
}

std::string qp(int e) { return "q^(" + std::to_string(e) + ")"; }

}  // namespace

ParamMatrix reference_spin_half() {
    return build(4,
                 {{1, 1, "s"},
                  {2, 2, "s^-1"},
                  {2, 3, "mu*s^-1*(q - q^-1)"},
                  {3, 3, "s^-1"},
                  {4, 4, "s"}},
                 Field::rational_function());
}

ParamMatrix reference_spin_one() {
    return build(9,
                 {{1, 1, "q^2"},
                  {2, 2, "1"},
                  {2, 4, "mu*(q^2 - q^-2)"},
                  {3, 3, "q^-2"},
                  {3, 5, "mu*q^-2*(q^2 - q^-2)"},
                  {3, 7, "mu^2*q^-1*(q - q^-1)^2*(q + q^-1)"},
                  {4, 4, "1"},
                  {5, 5, "1"},
                  {5, 7, "mu*(q^2 - q^-2)"},
                  {6, 6, "1"},
                  {6, 8, "mu*(q^2 - q^-2)"},
                  {7, 7, "q^-2"},
                  {8, 8, "1"},
                  {9, 9, "q^2"}},
                 Field::rational_function());
}

ParamMatrix reference_taft(int l, const Scalar& q) {
    const Field field = q.field();
    const ParamMatrix generic = build(9,
                                      {{1, 1, "1"},
                                       {2, 2, qp(-l - 2)},
                                       {2, 4, "(1 - q^-2)*mu"},
                                       {3, 3, qp(-2 * (l + 2))},
                                       {3, 5, qp(-l - 4) + "*(q^2 - 1)*mu"},
                                       {3, 7, "(1 - q^-1)*(1 - q^-2)*mu^2"},
                                       {4, 4, qp(l)},
                                       {5, 5, "q^-1"},
                                       {5, 7, qp(l + 1) + "*(1 - q^-2)*mu"},
                                       {6, 6, qp(-l - 2)},
                                       {6, 8, "(1 - q^-2)*mu"},
                                       {7, 7, qp(2 * l)},
                                       {8, 8, qp(l)},
                                       {9, 9, "1"}},
                                      field);
    return generic.map_entries([&](const ParamScalar& v) {
        return v.map_coefficients([&](const Scalar& c) { return c.substitute_generator(q); });
    });
}

}  // namespace bax::app
