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
#include "bax/qnumbers.hpp"

using namespace bax;

TEST_SUITE("qnumbers") {

TEST_CASE("brackets at a generic parameter") {
    const Field f = Field::rational_function();
    const Scalar q = Scalar::q(f);
    CHECK(q_bracket(0, q).is_zero());
    CHECK(q_bracket(3, q) == Scalar(1) + q + q * q);
    CHECK(q_bracket_factorial(0, q) == Scalar(1));
    CHECK(q_bracket_factorial(3, q) == (Scalar(1) + q) * (Scalar(1) + q + q * q));
    // (4 choose 2)_q = (1 + q^2)(1 + q + q^2)
    CHECK(gauss_binomial(4, 2, q) == (Scalar(1) + q * q) * (Scalar(1) + q + q * q));
    CHECK(gauss_binomial(5, 0, q) == Scalar(1));
    CHECK(gauss_binomial(5, 5, q) == Scalar(1));
}

TEST_CASE("balanced q-numbers") {
    const Field f = Field::rational_function();
    const Scalar q = Scalar::q(f);
    CHECK(q_number(1, q) == Scalar(1));
    CHECK(q_number(2, q) == q + q.inverse());
    CHECK(q_number(-2, q) == -(q + q.inverse()));
    CHECK(q_number_factorial(3, q) == (q + q.inverse()) * (q * q + Scalar(1) + q.pow(-2)));
    // q = 1: polynomial fallback gives n
    CHECK(q_number(4, Scalar(1)) == Scalar(4));
    CHECK_THROWS_AS(q_number(4, Scalar(1), false), DomainError);
}

TEST_CASE("property: q-Pascal and the balanced/unbalanced relation") {
    const Scalar q = Scalar::q(Field::rational_function());
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k < n; ++k)
            CHECK(gauss_binomial(n, k, q) == gauss_binomial(n - 1, k - 1, q) + q.pow(k) * gauss_binomial(n - 1, k, q));
        // [n]_q = q^{1-n} (n)_{q^2}
        CHECK(q_number(n, q) == q.pow(1 - n) * q_bracket(n, q * q));
    }
}

TEST_CASE("roots of unity") {
    const Scalar z = Scalar::generator(Field::cyclotomic(5));
    CHECK(q_bracket(5, z).is_zero());
    for (int m = 1; m < 5; ++m) CHECK_FALSE(q_bracket(m, z).is_zero());
    CHECK_NOTHROW(gauss_binomial(4, 2, z));
    CHECK_THROWS_AS(gauss_binomial(7, 5, z), DomainError);
}

}
