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

#include <vector>

#include "bax/hopf.hpp"

namespace bax {

/// Drinfeld double D(H) on the basis {b_g . b_f^*} (H to the left of H^*),
/// index g * dim(H) + f.
///
/// H and H^* (with its ordinary product) are subalgebras. The reordering
/// of f^* . h is
///
///     f^* . h = sum h_(2) . [ z -> f^*( h_(3) z S^{-1}(h_(1)) ) ]
///
/// which is what R Delta(h) = Delta^op(h) R forces for R = sum b_i (x) b_i^*.
/// On H^* the double carries the opposite coproduct, so
/// Delta(g . f^*) = sum g_(1) f^*_(2) (x) g_(2) f^*_(1).
struct DrinfeldDouble {
    HopfAlgebra base;          // H
    HopfAlgebra dual;          // H^*
    HopfAlgebra hopf;          // D(H)
    std::vector<AlgebraElement> antipode_inverse;  // S^{-1}(b_i) in H
    std::vector<AlgebraElement> cross;             // cross[f * n + h] = b_f^* . b_h in D(H)

    std::size_t base_dim() const noexcept { return base.dim(); }
    BasisIndex index(BasisIndex g, BasisIndex f) const { return g * static_cast<BasisIndex>(base_dim()) + f; }
    const FiniteAlgebra& algebra() const noexcept { return hopf.algebra; }

    /// h -> h . epsilon
    AlgebraElement embed_base(const AlgebraElement& h) const;
    /// f -> 1 . f
    AlgebraElement embed_dual(const AlgebraElement& f) const;
};

/// Throws NonInvertibleAntipode if S is singular.
DrinfeldDouble build_double(const HopfAlgebra& h);

/// R = sum_i b_i (x) b_i^*.
struct CanonicalR {
    TensorElement hopf_form;    // in H (x) H^*, one term per basis element
    TensorElement double_form;  // the same element written in D(H) (x) D(H)

    std::size_t term_count() const noexcept { return hopf_form.size(); }
};

CanonicalR canonical_r(const DrinfeldDouble& d);

/// Push a tensor in H (x) H^* into D(H) (x) D(H).
template <class C>
Tensor<C> to_double(const DrinfeldDouble& d, const Tensor<C>& hopf_form);

template <class C>
struct AlgebraicYbeReport {
    bool passed = false;
    Tensor<C> lhs{3};
    Tensor<C> difference{3};  // R12 R13 R23 - R23 R13 R12
};

/// Constant YBE R12 R13 R23 = R23 R13 R12 evaluated in D(H)^(x)3.
AlgebraicYbeReport<Scalar> check_constant_ybe_algebraic(const DrinfeldDouble& d, const TensorElement& r);

/// Multiplicative parametric YBE R12(mu) R13(mu nu) R23(nu) = R23(nu) R13(mu nu) R12(mu)
/// as an identity in D(H)^(x)3 with Laurent coefficients in mu, nu.
AlgebraicYbeReport<ParamScalar> check_parametric_ybe_algebraic(const DrinfeldDouble& d, const ParamTensor& r);

/// Apply an exponent substitution to every coefficient.
ParamTensor substitute(const ParamTensor& t, const ParamSubstitution& sub);

extern template TensorElement to_double(const DrinfeldDouble&, const TensorElement&);
extern template ParamTensor to_double(const DrinfeldDouble&, const ParamTensor&);

}  // namespace bax
