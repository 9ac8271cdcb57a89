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

#include "bax/baxterize.hpp"

#include <string>

namespace bax {

TensorElement GradedRElement::sum() const {
    TensorElement out(2);
    for (const auto& [p, t] : components) out += t;
    return out;
}

GradedRElement decompose_graded(const TensorElement& r, const Grading& left, const Grading& right,
                                const FiniteAlgebra* left_algebra, const FiniteAlgebra* right_algebra) {
    if (r.arity() != 2) throw ArityMismatch("decompose_graded: R must have arity 2");
    if (left.rank() != right.rank()) throw InvalidParameter("decompose_graded: leg gradings differ in rank");
    GradedRElement g{r, left, right, {}};
    const auto name = [](const FiniteAlgebra* a, BasisIndex i) {
        return a ? a->label(i) : "#" + std::to_string(i);
    };
    for (const auto& [k, c] : r.terms()) {
        if (k[0] >= left.size() || k[1] >= right.size())
            throw InvalidParameter("decompose_graded: grading does not cover every basis element");
        const Degree& da = left.degree(k[0]);
        const Degree& db = right.degree(k[1]);
        if (da != db)
            throw NotDiagonallyGraded("term " + name(left_algebra, k[0]) + " (x) " + name(right_algebra, k[1]) +
                                      " has leg degrees " + degree_str(da) + " and " + degree_str(db));
        auto [it, inserted] = g.components.try_emplace(da, TensorElement(2));
        it->second.add_term(k, c);
    }
    return g;
}

ParamTensor baxterize(const GradedRElement& g) {
    if (g.left.rank() != 1) throw InvalidParameter("baxterize: use baxterize_zn for Z^n gradings");
    ParamTensor out(2);
    for (const auto& [p, component] : g.components)
        for (const auto& [k, c] : component.terms()) out.add_term(k, ParamScalar(c, {p[0], 0}));
    return out;
}

DegreeMap linear_degree_map(std::vector<int> weights) {
    return [w = std::move(weights)](const Degree& p) {
        if (p.size() != w.size()) throw InvalidParameter("degree map rank mismatch");
        int out = 0;
        for (std::size_t k = 0; k < w.size(); ++k) out += w[k] * p[k];
        return out;
    };
}

ParamTensor baxterize_zn(const GradedRElement& g, const DegreeMap& tau) {
    const Degree zero(g.left.rank(), 0);
    if (tau(zero) != 0) throw InvalidParameter("baxterize_zn: tau(0) != 0, not a homomorphism");
    for (const auto& [p, cp] : g.components)
        for (const auto& [q, cq] : g.components)
            if (tau(p + q) != tau(p) + tau(q))
                throw InvalidParameter("baxterize_zn: tau is not additive on degrees " + degree_str(p) + " and " +
                                       degree_str(q));
    ParamTensor out(2);
    for (const auto& [p, component] : g.components) {
        const int e = tau(p);
        for (const auto& [k, c] : component.terms()) out.add_term(k, ParamScalar(c, {e, 0}));
    }
    return out;
}

TensorElement evaluate_at_one(const ParamTensor& t) {
    TensorElement out(t.arity());
    for (const auto& [k, c] : t.terms()) out.add_term(k, c.at_one());
    return out;
}

TensorElement degree_zero_part(const GradedRElement& g) {
    auto it = g.components.find(Degree(g.left.rank(), 0));
    return it == g.components.end() ? TensorElement(2) : it->second;
}

}  // namespace bax
