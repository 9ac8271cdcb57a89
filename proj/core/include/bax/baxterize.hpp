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

#include <functional>
#include <map>
#include <vector>

#include "bax/algebra.hpp"
#include "bax/hopf.hpp"

namespace bax {

/// A constant R in A (x) B split into homogeneous components R_p with every
/// term a (x) b of R_p satisfying deg_A(a) = deg_B(b) = p.
struct GradedRElement {
    TensorElement r;
    Grading left;
    Grading right;
    std::map<Degree, TensorElement> components;

    /// Sum of the components; equals r.
    TensorElement sum() const;
};

/// Throws NotDiagonallyGraded naming the first term whose legs disagree in
/// degree. `left_algebra` / `right_algebra` only supply labels for messages.
GradedRElement decompose_graded(const TensorElement& r, const Grading& left, const Grading& right,
                                const FiniteAlgebra* left_algebra = nullptr,
                                const FiniteAlgebra* right_algebra = nullptr);

/// R(mu) = sum_p mu^p R_p for a Z-graded decomposition.
ParamTensor baxterize(const GradedRElement& g);

/// Group homomorphism Z^n -> Z.
using DegreeMap = std::function<int(const Degree&)>;

/// tau(p) = sum_k weights[k] * p[k].
DegreeMap linear_degree_map(std::vector<int> weights);

/// R(mu) = sum_p mu^tau(p) R_p. Rejects tau that fails additivity on the
/// component degrees (tau(0) = 0 and tau(p + q) = tau(p) + tau(q)).
ParamTensor baxterize_zn(const GradedRElement& g, const DegreeMap& tau);

/// Value at mu = nu = 1; recovers R for a baxterized element.
TensorElement evaluate_at_one(const ParamTensor& t);

/// The mu -> 0 limit of a baxterized N-graded element: the degree-0 component.
TensorElement degree_zero_part(const GradedRElement& g);

}  // namespace bax
