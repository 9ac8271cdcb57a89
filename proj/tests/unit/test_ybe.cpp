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

#include "bax/errors.hpp"
#include "bax/taft.hpp"
#include "bax/uqsl2.hpp"
#include "bax/ybe.hpp"
#include "generators.hpp"

using namespace bax;

namespace {

std::vector<ParamMatrix> corpus() {
    std::vector<ParamMatrix> out{uqsl2_r_matrix(spin_half(), true), uqsl2_r_matrix(spin_one(), true)};
    const TaftAlgebra t = build_taft(4, taft_root(4));
    for (int l = 1; l <= 4; ++l) out.push_back(taft_r_matrix(t, rep_irreducible(t, 3, l), true));
    out.push_back(taft_r_matrix(t, rep_indecomposable(t, Scalar(7), 2), true));
    return out;
}

}  // namespace

TEST_SUITE("ybe") {

TEST_CASE("identity and flip") {
    for (std::size_t d : {1, 2, 3, 4}) {
        CHECK(check_constant_ybe(ParamMatrix::identity(d * d)).passed);
        CHECK(braid_check(ParamMatrix::identity(d * d)).passed);
        CHECK(check_parametric_ybe(ParamMatrix::identity(d * d)).passed);
        CHECK(check_constant_ybe(flip(d)).passed);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(check_constant_ybe(ParamMatrix::identity(5)), DimensionNotSquare);
    CHECK_THROWS_AS(check_constant_ybe(ParamMatrix(4, 9)), DimensionNotSquare);
    CHECK_THROWS_AS(check_constant_ybe(uqsl2_r_matrix(spin_half(), true)), InvalidParameter);
    ParamMatrix with_nu = ParamMatrix::identity(4);
    with_nu.set(0, 0, ParamScalar::nu());
    CHECK_THROWS_AS(check_parametric_ybe(with_nu), InvalidParameter);
}

TEST_CASE("slot embedding") {
    // R13 for R = E_{(1,2),(2,1)} on C^2 (x) C^2
    ParamMatrix r(4, 4);
    r.set(1, 2, ParamScalar(1));
    const ParamMatrix r13 = embed_slots(r, 2, 1, 3);
    CHECK(r13.nonzeros() == 2);
    // basis (i,j,k) -> 4i + 2j + k; (0,j,1) -> (1,j,0)
    CHECK(r13.at(1, 4) == ParamScalar(1));
    CHECK(r13.at(3, 6) == ParamScalar(1));
    CHECK(embed_slots(r, 2, 1, 2) == kron(r, ParamMatrix::identity(2)));
    CHECK(embed_slots(r, 2, 2, 3) == kron(ParamMatrix::identity(2), r));
}

TEST_CASE("negative controls") {
    ParamMatrix half = uqsl2_r_matrix(spin_half(), false);
    half.set(1, 2, half.at(1, 2) * ParamScalar(2));
    const YbeReport a = check_constant_ybe(half);
    CHECK_FALSE(a.passed);
    REQUIRE(a.worst.has_value());
    CHECK_FALSE(a.worst->value.is_zero());
    CHECK_FALSE(braid_check(half).passed);

    ParamMatrix one = uqsl2_r_matrix(spin_one(), true);
    one.set(2, 6, one.at(2, 6) + ParamScalar::mu(2));
    CHECK_FALSE(check_parametric_ybe(one).passed);
}

TEST_CASE("property: constant and parametric checks agree on constant input") {
    for (const ParamMatrix& m : corpus()) {
        const ParamMatrix c = m.at_one();
        CHECK(check_constant_ybe(c).passed == check_parametric_ybe(c).passed);
        CHECK(check_constant_ybe(c).passed == braid_check(c).passed);
    }
    testing::Gen g(41);
    for (int trial = 0; trial < 20; ++trial) {
        ParamMatrix c = corpus()[static_cast<std::size_t>(g.integer(0, 6))].at_one();
        const std::size_t r = static_cast<std::size_t>(g.integer(0, static_cast<int>(c.rows()) - 1));
        const std::size_t col = static_cast<std::size_t>(g.integer(0, static_cast<int>(c.rows()) - 1));
        c.add(r, col, ParamScalar(g.nonzero_scalar(Field::rational())));
        const YbeReport constant = check_constant_ybe(c);
        CHECK(constant.passed == check_parametric_ybe(c).passed);
        CHECK(constant.passed == braid_check(c).passed);
    }
}

TEST_CASE("property: swapping the sides negates the residual") {
    testing::Gen g(43);
    for (int trial = 0; trial < 10; ++trial) {
        ParamMatrix m = corpus()[static_cast<std::size_t>(g.integer(0, 6))];
        const std::size_t r = static_cast<std::size_t>(g.integer(0, static_cast<int>(m.rows()) - 1));
        m.add(r, r, ParamScalar::mu(g.integer(0, 2)) * Scalar(g.integer(1, 3)));
        const YbeReport fwd = check_parametric_ybe(m);
        const YbeReport back = check_parametric_ybe(m, true);
        CHECK((fwd.residual + back.residual).is_zero());
        const ParamMatrix c = m.at_one();
        CHECK((check_constant_ybe(c).residual + check_constant_ybe(c, true).residual).is_zero());
    }
}

TEST_CASE("property: graded constant solutions baxterize to parametric solutions") {
    for (const ParamMatrix& m : corpus()) {
        CHECK(check_constant_ybe(m.at_one()).passed);
        CHECK(check_parametric_ybe(m).passed);
    }
}

}
