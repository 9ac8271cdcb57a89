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

#include "bax/algebra.hpp"

namespace bax {

/// Structure constants of a finite-dimensional Hopf algebra over its basis.
struct HopfAlgebra {
    FiniteAlgebra algebra;
    std::vector<TensorElement> coproduct;  // coproduct[i] = Delta(b_i), arity 2
    std::vector<Scalar> counit;            // counit[i] = epsilon(b_i)
    std::vector<AlgebraElement> antipode;  // antipode[i] = S(b_i)

    std::size_t dim() const noexcept { return algebra.dim(); }

    TensorElement apply_coproduct(const AlgebraElement& x) const;
    Scalar apply_counit(const AlgebraElement& x) const;
    AlgebraElement apply_antipode(const AlgebraElement& x) const;
    /// (Delta (x) id) Delta(b_i), arity 3.
    TensorElement double_coproduct(BasisIndex i) const;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

struct HopfReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Result of the named family; throws std::out_of_range if absent.
    const CheckResult& at(const std::string& name) const;
};

/// Exhaustive check of the five axiom families over the basis:
/// "associativity/unit", "coassociativity", "counit", "bialgebra", "antipode".
HopfReport check_hopf_axioms(const HopfAlgebra& h);

/// Degree of a basis element in Z^n (n = rank).
using Degree = std::vector<int>;

Degree operator+(const Degree& a, const Degree& b);
std::string degree_str(const Degree& d);

/// Every basis element is homogeneous; degree(i) is its degree.
class Grading {
public:
    Grading() = default;
    explicit Grading(std::vector<Degree> degrees);
    static Grading integer(const std::vector<int>& degrees);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    const Degree& degree(BasisIndex i) const { return degrees_.at(i); }
    /// Degree of a rank-1 grading.
    int integer_degree(BasisIndex i) const;
    /// True iff some basis element has nonzero degree.
    bool nontrivial() const;

    const std::vector<Degree>& degrees() const noexcept { return degrees_; }

private:
    std::vector<Degree> degrees_;
    std::size_t rank_ = 1;
};

struct GradingReport {
    bool passed = true;
    /// Definition-level "nontrivial": some A^p with p != 0 is nonzero.
    bool nontrivial = false;
    std::vector<std::string> violations;
};

/// Multiplicative homogeneity: b_i b_j lies in the span of degree d(i)+d(j).
GradingReport check_grading(const FiniteAlgebra& a, const Grading& d);

/// Delta(A^p) lies in the sum over q of A^q (x) A^(p-q).
GradingReport check_coproduct_grading(const HopfAlgebra& h, const Grading& d);

/// Dual Hopf algebra on the dual basis {b_i^*}, <b_i^*, b_j> = delta_ij:
/// product transposes Delta, coproduct transposes m, unit is epsilon,
/// counit is evaluation at 1, antipode is the transpose of S.
HopfAlgebra dual(const HopfAlgebra& h);

/// Degree of (b_i)^* is the degree of b_i. Throws PreconditionViolation unless
/// d passes both check_grading and check_coproduct_grading on h.
Grading dual_grading(const HopfAlgebra& h, const Grading& d);

}  // namespace bax
