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

#include "bax/dense_matrix.hpp"
#include "bax/double.hpp"
#include "bax/matrix.hpp"

namespace bax {

/// Representation of D(H) given on the two subalgebras; pi(g . f^*) = pi(g) pi(f^*).
struct DoubleRepresentation {
    std::string name;
    std::size_t dim = 0;
    std::vector<DenseMatrix> on_base;  // pi(b_i)
    std::vector<DenseMatrix> on_dual;  // pi(b_i^*)

    DenseMatrix on_double(BasisIndex g, BasisIndex f) const { return on_base.at(g) * on_dual.at(f); }
    DenseMatrix apply_base(const AlgebraElement& h) const;
    DenseMatrix apply_dual(const AlgebraElement& f) const;
    /// x in D(H), expanded over the basis g * dim(H) + f.
    DenseMatrix apply_double(const AlgebraElement& x) const;
};

struct RepresentationReport {
    bool passed = true;
    std::vector<std::string> failures;
};

/// Checks pi(1) = I, multiplicativity on H x H and H^* x H^*, and the cross
/// relation pi(f^*) pi(h) = pi(f^* . h). `exhaustive` adds every pair of
/// basis elements of D(H) through the full product table.
RepresentationReport check_representation(const DrinfeldDouble& d, const DoubleRepresentation& rep,
                                          bool exhaustive = false);

/// Multiplicativity of rep.on_base alone over H x H, plus pi(1) = I.
RepresentationReport check_base_representation(const HopfAlgebra& h, const DoubleRepresentation& rep);

/// (pi (x) pi)(t) for t in H (x) H^*.
ParamMatrix represent(const ParamTensor& t, const DoubleRepresentation& rep);
ParamMatrix represent(const TensorElement& t, const DoubleRepresentation& rep);

}  // namespace bax
