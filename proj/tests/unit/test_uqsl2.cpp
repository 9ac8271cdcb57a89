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

#include <doctest.h>

#include "bax/qnumbers.hpp"
#include "bax/uqsl2.hpp"
#include "bax/ybe.hpp"

using namespace bax;

namespace {

const Field kF = Field::rational_function();
const Scalar s = Scalar::generator(kF);
const Scalar q = Scalar::q(kF);

}  // namespace

TEST_SUITE("uqsl2") {

TEST_CASE("representation matrices") {
    const WeightedRep half = spin_half();
    CHECK(half.h == DenseMatrix::diagonal({Scalar(1), Scalar(-1)}));
    CHECK(half.e_core == DenseMatrix::elementary(2, 1, 2));
    CHECK(half.f_core == DenseMatrix::elementary(2, 2, 1));
    const WeightedRep one = spin_one();
    CHECK(one.h == DenseMatrix::diagonal({Scalar(2), Scalar(0), Scalar(-2)}));
    CHECK(one.prefactor_square == q + q.inverse());
    CHECK(check_weighted_rep(half).passed);
    CHECK(check_weighted_rep(one).passed);
}

TEST_CASE("commutator oracle for spin 1/2") {
    // ef - fe = diag(1, -1) = (q^h - q^-h)/(q - q^-1) with weights +-1
    const WeightedRep half = spin_half();
    CHECK(half.e_core * half.f_core - half.f_core * half.e_core == DenseMatrix::diagonal({Scalar(1), Scalar(-1)}));
}

TEST_CASE("broken relations are reported") {
    WeightedRep bad = spin_one();
    bad.prefactor_square = Scalar(2);
    CHECK_FALSE(check_weighted_rep(bad).passed);
    WeightedRep bad_h = spin_half();
    bad_h.h = DenseMatrix::diagonal({Scalar(1), Scalar(1)});
    CHECK_FALSE(check_weighted_rep(bad_h).passed);
}

TEST_CASE("spin-1/2 matrix") {
    const ParamMatrix r = uqsl2_r_matrix(spin_half(), true);
    CHECK(r.at(0, 0) == ParamScalar(s));
    CHECK(r.at(1, 1) == ParamScalar(s.inverse()));
    CHECK(r.at(2, 2) == ParamScalar(s.inverse()));
    CHECK(r.at(3, 3) == ParamScalar(s));
    CHECK(r.at(1, 2) == ParamScalar::mu() * (s.inverse() * (q - q.inverse())));
    CHECK(r.nonzeros() == 5);
}

TEST_CASE("spin-1 matrix") {
    const ParamMatrix r = uqsl2_r_matrix(spin_one(), true);
    CHECK(r.at(2, 6) == ParamScalar::mu(2) * (q.inverse() * (q - q.inverse()).pow(2) * (q + q.inverse())));
    CHECK(r.at(1, 3) == ParamScalar::mu() * (q * q - q.pow(-2)));
    CHECK(r.at(0, 0) == ParamScalar(q * q));
    CHECK(r.nonzeros() == 14);
}

TEST_CASE("series terms match the e-degree grading") {
    for (const WeightedRep& rep : {spin_half(), spin_one()}) {
        const GradedRElement g = uqsl2_term_grading(rep);
        CHECK(g.components.size() == rep.dim);
        const ParamTensor rmu = baxterize(g);
        for (const auto& [k, c] : rmu.terms()) {
            CHECK(k[0] == k[1]);
            CHECK(c.is_monomial());
            CHECK(c.terms().begin()->first == ParamExponents{static_cast<int>(k[0]), 0});
        }
        CHECK(check_term_grading(rep).passed);
        // terms with n >= d vanish: e^d = 0
        CHECK(rep.e_core.pow(static_cast<unsigned>(rep.dim)).is_zero());
    }
    // the n = 2 coefficient q^3 (1 - q^-2)^2 / [2]_q!
    const GradedRElement g = uqsl2_term_grading(spin_one());
    CHECK(g.components.at({2}).coefficient({2, 2}) ==
          q.pow(3) * (Scalar(1) - q.pow(-2)).pow(2) / q_number_factorial(2, q));
}

TEST_CASE("Yang-Baxter equations") {
    for (const WeightedRep& rep : {spin_half(), spin_one()}) {
        CHECK(check_parametric_ybe(uqsl2_r_matrix(rep, true)).passed);
        const ParamMatrix c = uqsl2_r_matrix(rep, false);
        CHECK(c == uqsl2_r_matrix(rep, true).at_one());
        CHECK(check_constant_ybe(c).passed);
        CHECK(braid_check(c).passed);
    }
}

}
