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
#include <string>
#include <vector>

#include "bax/matrix.hpp"

namespace bax {

/// a = lambda G b G^{-1} with G = diag(g), i.e. a_ij = lambda (g_i / g_j) b_ij.
struct DiagonalRelation {
    Scalar lambda;
    std::vector<Scalar> g;  // g[0] = 1 in every connected block of the support graph
};

struct RelationSearch {
    std::optional<DiagonalRelation> relation;
    std::string reason;  // why none exists, when relation is empty
};

/// Finds lambda and G from the (1,1) entry and the off-diagonal support, then
/// verifies every entry. Both matrices must be square of equal size and over
/// the same field.
RelationSearch find_diagonal_relation(const ParamMatrix& a, const ParamMatrix& b);

/// Apply a ring map to every coefficient (e.g. a field embedding).
template <class F>
ParamMatrix map_scalars(const ParamMatrix& m, F&& f) {
    return m.map_entries([&](const ParamScalar& v) { return v.map_coefficients(f); });
}

}  // namespace bax
