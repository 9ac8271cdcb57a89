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

#include <string>
#include <vector>

#include "bax/baxterize.hpp"
#include "bax/dense_matrix.hpp"
#include "bax/matrix.hpp"

namespace bax {

/// Finite-dimensional representation of U_q[sl(2)] over Q(s), s^2 = q, on a
/// weight basis. e = sqrt(c) e_core and f = sqrt(c) f_core with c =
/// prefactor_square, so only even powers of sqrt(c) ever appear in e^n (x) f^n.
struct WeightedRep {
    std::string name;
    std::size_t dim = 0;
    DenseMatrix e_core;
    DenseMatrix f_core;
    DenseMatrix h;
    std::vector<int> weights;  // eigenvalues of h, h = diag(weights)
    Scalar prefactor_square{1};
};

WeightedRep spin_half();
WeightedRep spin_one();

struct WeightedRepReport {
    bool passed = true;
    std::vector<std::string> failures;
};

/// [h,e] = 2e, [h,f] = -2f, [e,f] = (q^h - q^-h)/(q - q^-1), e^d = f^d = 0.
WeightedRepReport check_weighted_rep(const WeightedRep& rep);

/// The series terms q^{n(n+1)/2} (1-q^-2)^n / [n]_q! q^{h(x)h/2} e^n (x) f^n,
/// n < dim, as an abstract tensor on indices (n, n): slot 1 stands for H e^n,
/// slot 2 for H f^n, both in degree n. Coefficients are the scalar prefactors.
GradedRElement uqsl2_term_grading(const WeightedRep& rep);

/// Grading of the represented generators: e^n shifts weights by +2n and is
/// homogeneous of degree n, f^n by -2n, h is of degree 0; products of
/// homogeneous elements stay homogeneous.
WeightedRepReport check_term_grading(const WeightedRep& rep);

/// q^{h(x)h/2} as a diagonal d^2 x d^2 matrix, entries s^{w_i w_j}.
DenseMatrix cartan_factor(const WeightedRep& rep);

/// Image of the truncated universal R; term n carries mu^n when parametric.
ParamMatrix uqsl2_r_matrix(const WeightedRep& rep, bool parametric);

}  // namespace bax
