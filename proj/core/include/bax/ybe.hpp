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

#include <cstddef>
#include <optional>
#include <string>

#include "bax/matrix.hpp"

namespace bax {

enum class YbeKind { constant, parametric, braid };

const char* to_string(YbeKind kind);

struct ResidualEntry {
    std::size_t row = 0;  // 1-based
    std::size_t col = 0;  // 1-based
    ParamScalar value;
};

struct YbeReport {
    YbeKind kind = YbeKind::constant;
    std::size_t dimension = 0;  // d, the dimension of one tensor factor
    ParamMatrix residual;       // lhs - rhs, d^3 x d^3
    bool passed = false;
    /// Nonzero residual entry with the most terms (first in row-major order on ties).
    std::optional<ResidualEntry> worst;

    std::string summary() const;
};

/// R12 R13 R23 - R23 R13 R12 for a parameter-free d^2 x d^2 matrix. With
/// `swapped` the two sides trade places and the residual changes sign.
/// Throws DimensionNotSquare, or InvalidParameter if R depends on mu or nu.
YbeReport check_constant_ybe(const ParamMatrix& r, bool swapped = false);

/// R12(mu) R13(mu nu) R23(nu) - R23(nu) R13(mu nu) R12(mu) as an identity of
/// Laurent polynomials. R may depend on mu only.
YbeReport check_parametric_ybe(const ParamMatrix& r, bool swapped = false);

/// (PR)12 (PR)23 (PR)12 - (PR)23 (PR)12 (PR)23 with P the flip.
YbeReport braid_check(const ParamMatrix& r);

}  // namespace bax
