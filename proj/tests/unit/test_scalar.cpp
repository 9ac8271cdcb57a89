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
#include "bax/scalar.hpp"
#include "generators.hpp"

using namespace bax;

TEST_SUITE("scalar") {

TEST_CASE("roots of unity") {
    for (int n : {2, 3, 4, 5, 6, 8, 12}) {
        const Scalar z = Scalar::generator(Field::cyclotomic(n));
        CHECK(z.pow(n).is_one());
        for (int k = 1; k < n; ++k) CHECK_FALSE(z.pow(k).is_one());
        CHECK(z.pow(-1) * z == Scalar(1));
    }
    CHECK(Scalar::generator(Field::cyclotomic(2)) == Scalar(-1));
    // 1 + z + z^2 = 0 in Q(z_3)
    const Scalar w = Scalar::generator(Field::cyclotomic(3));
    CHECK((Scalar(1) + w + w * w).is_zero());
}

TEST_CASE("square root generator") {
    const Field f = Field::rational_function();
    const Scalar s = Scalar::generator(f);
    CHECK(s * s == Scalar::q(f));
    CHECK(s.pow(-3).str() == "s^-3");
    CHECK((s - s.inverse()).str() == "-s^-1 + s");
    const Scalar r = Scalar(1) / (Scalar(1) + s * s);
    CHECK(r.str() == "(1)/(1 + s^2)");
    CHECK(Scalar::parse(r.str(), f) == r);
}

TEST_CASE("field mismatch") {
    const Scalar a = Scalar::generator(Field::cyclotomic(3));
    const Scalar b = Scalar::generator(Field::cyclotomic(5));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * Scalar::generator(Field::rational_function()), FieldMismatch);
    CHECK_NOTHROW(a + Scalar(3));
    CHECK(Scalar(2) == Scalar(Field::cyclotomic(7), Poly(Rational(2))));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
    const Scalar z = Scalar::generator(Field::cyclotomic(4));
    CHECK_THROWS_AS((z * z + Scalar(1)).inverse(), DomainError);
}

TEST_CASE("property: field axioms") {
    testing::Gen g(3);
    for (const Field f : {Field::rational(), Field::cyclotomic(5), Field::cyclotomic(12), Field::rational_function()}) {
        CAPTURE(f.name());
        for (int trial = 0; trial < 60; ++trial) {
            const Scalar a = g.scalar(f), b = g.scalar(f), c = g.scalar(f);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("property: canonical string round trip") {
    testing::Gen g(5);
    for (const Field f : {Field::rational(), Field::cyclotomic(7), Field::cyclotomic(8), Field::rational_function()}) {
        for (int trial = 0; trial < 60; ++trial) {
            const Scalar a = g.scalar(f);
            const Scalar back = Scalar::parse(a.str(), f);
            CHECK(back == a);
            CHECK(back.str() == a.str());
        }
    }
}

TEST_CASE("property: generator substitution is a ring map") {
    testing::Gen g(9);
    // z_6 -> z_12^2 and s -> z_12
    const Scalar z12 = Scalar::generator(Field::cyclotomic(12));
    for (int trial = 0; trial < 40; ++trial) {
        const Scalar a = g.scalar(Field::cyclotomic(6)), b = g.scalar(Field::cyclotomic(6));
        CHECK((a * b).substitute_generator(z12.pow(2)) ==
              a.substitute_generator(z12.pow(2)) * b.substitute_generator(z12.pow(2)));
        CHECK((a + b).substitute_generator(z12.pow(2)) ==
              a.substitute_generator(z12.pow(2)) + b.substitute_generator(z12.pow(2)));
    }
    const Scalar s = Scalar::generator(Field::rational_function());
    CHECK((s.pow(-2) + s.pow(4)).substitute_generator(z12) == z12.pow(-2) + z12.pow(4));
    // z_4 does not go to z_12: z_12 is not a root of Phi_4
    CHECK_THROWS_AS(Scalar::generator(Field::cyclotomic(4)).substitute_generator(z12), DomainError);
}

TEST_CASE("field names") {
    CHECK(Field::cyclotomic(9).name() == "cyclotomic:9");
    CHECK(Field::parse("cyclotomic:9") == Field::cyclotomic(9));
    CHECK(Field::parse("rational-function") == Field::rational_function());
    CHECK(Field::parse("rational") == Field::rational());
    CHECK_THROWS(Field::parse("reals"));
}

}
