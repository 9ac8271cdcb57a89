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
#include "bax/param_scalar.hpp"
#include "generators.hpp"

using namespace bax;

TEST_SUITE("param_scalar") {

TEST_CASE("canonical text") {
    const Field f = Field::rational_function();
    const Scalar s = Scalar::generator(f);
    CHECK(ParamScalar(Scalar(3)).str() == "3");
    CHECK(ParamScalar::mu().str() == "mu");
    CHECK((ParamScalar::mu(2) * ParamScalar::nu()).str() == "mu^2*nu");
    CHECK((ParamScalar::mu() * (s - s.pow(-3))).str() == "(-s^-3 + s)*mu");
    CHECK(ParamScalar().str() == "0");
}

TEST_CASE("parser") {
    const Field f = Field::rational_function();
    const Scalar q = Scalar::q(f);
    const Scalar s = Scalar::generator(f);
    CHECK(parse_param_scalar("mu*q^-1*(q - q^-1)^2*(q + q^-1)", f) ==
          ParamScalar::mu() * (q.inverse() * (q - q.inverse()).pow(2) * (q + q.inverse())));
    CHECK(parse_param_scalar("s^(-3)", f) == ParamScalar(s.pow(-3)));
    CHECK(parse_param_scalar("-q^2", f) == ParamScalar(-(q * q)));
    CHECK(parse_param_scalar("mu/nu", f) == ParamScalar(Scalar(1), {1, -1}));
    CHECK(parse_param_scalar("6/4", Field::rational()) == ParamScalar(Scalar(Rational(3, 2))));
    CHECK_THROWS_AS(parse_param_scalar("q", Field::rational()), ParseError);
    CHECK_THROWS_AS(parse_param_scalar("s", Field::cyclotomic(4)), ParseError);
    CHECK_THROWS_AS(parse_param_scalar("1/(1 + mu)", f), ParseError);
    CHECK_THROWS_AS(parse_param_scalar("1/0", f), ParseError);
    CHECK_THROWS_AS(parse_param_scalar("(q", f), ParseError);
    CHECK_THROWS_AS(parse_param_scalar("x", f), ParseError);
    CHECK_THROWS_AS(Scalar::parse("mu", f), ParseError);
}

TEST_CASE("substitution") {
    const ParamSubstitution to_mu_nu{{{1, 0}, {1, 0}}};
    const ParamSubstitution to_nu{{{0, 0}, {1, 0}}};
    CHECK(ParamScalar::mu(2).substitute(to_mu_nu) == ParamScalar(Scalar(1), {2, 2}));
    CHECK(ParamScalar::mu(-1).substitute(to_nu) == ParamScalar::nu(-1));
    CHECK((ParamScalar::mu() * Scalar(5) + ParamScalar(Scalar(2))).at_one() == Scalar(7));
}

TEST_CASE("division by monomials only") {
    const ParamScalar x = ParamScalar::mu(3) * Scalar(4);
    CHECK(x.divided_by(ParamScalar::mu() * Scalar(2)) == ParamScalar::mu(2) * Scalar(2));
    CHECK_THROWS_AS(x.divided_by(ParamScalar::mu() + ParamScalar(1)), DomainError);
    CHECK_THROWS_AS(ParamScalar::mu().constant_value(), DomainError);
}

TEST_CASE("property: ring laws and substitution homomorphism") {
    testing::Gen g(13);
    const ParamSubstitution subs[] = {{{{1, 0}, {1, 0}}}, {{{0, 0}, {1, 0}}}, {{{2, -1}, {1, 3}}}};
    for (const Field f : {Field::cyclotomic(5), Field::rational_function()}) {
        for (int trial = 0; trial < 50; ++trial) {
            const ParamScalar a = g.param_scalar(f), b = g.param_scalar(f), c = g.param_scalar(f);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a - a).is_zero());
            for (const auto& sub : subs) {
                CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
                CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
            }
            CHECK((a * b).at_one() == a.at_one() * b.at_one());
        }
    }
}

TEST_CASE("property: text round trip") {
    testing::Gen g(17);
    for (const Field f : {Field::rational(), Field::cyclotomic(9), Field::rational_function()}) {
        for (int trial = 0; trial < 60; ++trial) {
            const ParamScalar a = g.param_scalar(f);
            const ParamScalar back = parse_param_scalar(a.str(), f);
            CHECK(back == a);
            CHECK(back.str() == a.str());
        }
    }
}

}
