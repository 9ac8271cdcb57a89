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

#include "bax/ybe.hpp"

#include <sstream>

#include "bax/errors.hpp"

namespace bax {
namespace {

YbeReport finish(YbeKind kind, std::size_t d, ParamMatrix residual) {
    YbeReport report;
    report.kind = kind;
    report.dimension = d;
    report.passed = residual.is_zero();
    for (std::size_t r = 0; r < residual.rows(); ++r)
        for (const auto& [c, v] : residual.row(r))
            if (!report.worst || v.terms().size() > report.worst->value.terms().size())
                report.worst = ResidualEntry{r + 1, c + 1, v};
    report.residual = std::move(residual);
    return report;
}

YbeReport triple(YbeKind kind, std::size_t d, const ParamMatrix& r12, const ParamMatrix& r13,
                 const ParamMatrix& r23, bool swapped) {
    ParamMatrix lhs = r12 * r13 * r23;
    ParamMatrix rhs = r23 * r13 * r12;
    return finish(kind, d, swapped ? rhs - lhs : lhs - rhs);
}

}  // namespace

const char* to_string(YbeKind kind) {
    switch (kind) {
        case YbeKind::constant: return "constant";
        case YbeKind::parametric: return "parametric";
        case YbeKind::braid: return "braid";
    }
    return "unknown";
}

std::string YbeReport::summary() const {
    std::ostringstream os;
    os << to_string(kind) << " YBE, d=" << dimension << ": " << (passed ? "pass" : "FAIL");
    if (worst)
        os << " (" << residual.nonzeros() << " nonzero residual entries, worst at (" << worst->row << ','
           << worst->col << ") = " << worst->value.str() << ')';
    return os.str();
}

YbeReport check_constant_ybe(const ParamMatrix& r, bool swapped) {
    const std::size_t d = tensor_factor_dim(r);
    if (r.has_parameters()) throw InvalidParameter("check_constant_ybe: R depends on a spectral parameter");
    return triple(YbeKind::constant, d, embed_slots(r, d, 1, 2), embed_slots(r, d, 1, 3), embed_slots(r, d, 2, 3),
                  swapped);
}

YbeReport check_parametric_ybe(const ParamMatrix& r, bool swapped) {
    const std::size_t d = tensor_factor_dim(r);
    if (r.has_nu()) throw InvalidParameter("check_parametric_ybe: R must depend on mu only");
    const ParamSubstitution to_mu_nu{{{1, 0}, {1, 0}}};
    const ParamSubstitution to_nu{{{0, 0}, {1, 0}}};
    return triple(YbeKind::parametric, d, embed_slots(r, d, 1, 2), embed_slots(r.substitute(to_mu_nu), d, 1, 3),
                  embed_slots(r.substitute(to_nu), d, 2, 3), swapped);
}

YbeReport braid_check(const ParamMatrix& r) {
    const std::size_t d = tensor_factor_dim(r);
    if (r.has_parameters()) throw InvalidParameter("braid_check: R depends on a spectral parameter");
    const ParamMatrix pr = flip(d) * r;
    const ParamMatrix b12 = embed_slots(pr, d, 1, 2);
    const ParamMatrix b23 = embed_slots(pr, d, 2, 3);
    return finish(YbeKind::braid, d, b12 * b23 * b12 - b23 * b12 * b23);
}

}  // namespace bax
