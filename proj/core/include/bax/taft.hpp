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

#include "bax/baxterize.hpp"
#include "bax/hopf.hpp"
#include "bax/matrix.hpp"
#include "bax/representation.hpp"

namespace bax {

/// Taft algebra T_{N,q}: a^N = 1, x^N = 0, xa = q ax, with basis a^i x^j at
/// index i * N + j and the grading deg(a^i x^j) = j.
struct TaftAlgebra {
    int N = 0;
    Scalar q;
    HopfAlgebra hopf;
    Grading grading;

    BasisIndex index(int i, int j) const { return static_cast<BasisIndex>(i * N + j); }
};

/// z^k in Q(z), z a primitive N-th root of unity.
Scalar taft_root(int N, int k = 1);

/// q^N = 1 and q^k != 1 for 0 < k < N.
bool is_primitive_root(const Scalar& q, int N);

/// Throws InvalidParameter unless N >= 2 and q is a primitive N-th root of unity.
TaftAlgebra build_taft(int N, const Scalar& q);

/// Irreducible pi_{n,l}, 1 <= n, l <= N, on C^n.
DoubleRepresentation rep_irreducible(const TaftAlgebra& t, int n, int l);

/// N-dimensional indecomposable pi_alpha with label l. The base part is
///
///   pi(a^i x^j) = alpha q^{-i(j+l)} (N-2)_q!/(N-j-1)_q! prod_{p=1}^{j-1} (1 - q^{-p}) e_{N+1-j,1}   (j >= 1)
///               + sum_{k=1}^{N-j} q^{i(k-1-l)} prod_{m=k-1}^{k+j-2} (m)_q prod_{p=0}^{j-1} (1 - q^{k+p}) e_{k,k+j}
///
/// and the dual part is that of pi_{N,l}.
DoubleRepresentation rep_indecomposable(const TaftAlgebra& t, const Scalar& alpha, int l);

/// sum_i b_i (x) b_i^* in T (x) T^*.
TensorElement taft_canonical_r(const TaftAlgebra& t);

/// The canonical element split by x-degree on both legs.
GradedRElement taft_graded_r(const TaftAlgebra& t);

/// sum_{i,j} mu^j pi(a^i x^j) (x) pi((a^i x^j)^*), or the same at mu = 1.
ParamMatrix taft_r_matrix(const TaftAlgebra& t, const DoubleRepresentation& rep, bool parametric);

}  // namespace bax
