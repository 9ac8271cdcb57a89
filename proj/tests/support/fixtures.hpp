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

#include "bax/hopf.hpp"

namespace bax::testing {

/// Group algebra Q[Z_n]: basis g^k, Delta(g) = g (x) g, S(g) = g^-1.
inline HopfAlgebra cyclic_group_algebra(int n) {
    std::vector<std::string> labels;
    std::vector<AlgebraElement> table;
    for (int i = 0; i < n; ++i) labels.push_back("g^" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table.push_back(AlgebraElement::basis(static_cast<BasisIndex>((i + j) % n)));
    FiniteAlgebra a("Q[Z_" + std::to_string(n) + "]", labels, Field::rational(), table, AlgebraElement::basis(0));
    std::vector<TensorElement> coproduct;
    std::vector<Scalar> counit;
    std::vector<AlgebraElement> antipode;
    for (int i = 0; i < n; ++i) {
        TensorElement t(2);
        t.add_term({static_cast<BasisIndex>(i), static_cast<BasisIndex>(i)}, Scalar(1));
        coproduct.push_back(t);
        counit.emplace_back(1);
        antipode.push_back(a.basis(static_cast<BasisIndex>((n - i) % n)));
    }
    return HopfAlgebra{a, coproduct, counit, antipode};
}

}  // namespace bax::testing
