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

#include "bax/poly.hpp"
#include "generators.hpp"

using bax::Poly;
using bax::Rational;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("trailing zeros are trimmed") {
    CHECK(P({1, 2, 0, 0}) == P({1, 2}));
    CHECK(P({0, 0}).is_zero());
    CHECK(P({0, 0, 3}).is_monomial());
    CHECK(P({0, 0, 3}).valuation() == 2);
}

TEST_CASE("product and string form") {
    const Poly a = P({1, 1});
    CHECK((a * a) == P({1, 2, 1}));
    CHECK(P({1, -2, 0, 0, 0}).str("q") == "1 - 2*q");
    CHECK((Poly::monomial(Rational(1, 3), 4) + P({1})).str("q") == "1 + 1/3*q^4");
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(bax::cyclotomic_polynomial(1) == P({-1, 1}));
    CHECK(bax::cyclotomic_polynomial(4) == P({1, 0, 1}));
    CHECK(bax::cyclotomic_polynomial(6) == P({1, -1, 1}));
    CHECK(bax::cyclotomic_polynomial(12) == P({1, 0, -1, 0, 1}));
    // t^n - 1 = prod_{d | n} Phi_d
    for (int n = 1; n <= 24; ++n) {
        Poly prod = P({1});
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * bax::cyclotomic_polynomial(d);
        CHECK(prod == Poly::monomial(Rational(1), n) - P({1}));
        CHECK(bax::cyclotomic_polynomial(n).degree() == static_cast<std::size_t>(bax::euler_phi(n)));
    }
}

TEST_CASE("property: division identity") {
    bax::testing::Gen g(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = g.poly(6);
        Poly b = g.poly(4);
        if (b.is_zero()) continue;
        const auto [quot, rem] = Poly::divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK((rem.is_zero() || rem.degree() < b.degree()));
    }
}

TEST_CASE("property: gcd divides both and cofactor inverts modulo") {
    bax::testing::Gen g(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly common = g.poly(2);
        const Poly a = g.poly(3) * common;
        const Poly b = g.poly(3) * common;
        if (a.is_zero() || b.is_zero()) continue;
        const Poly d = bax::gcd(a, b);
        CHECK(d.leading() == 1);
        CHECK(Poly::divmod(a, d).second.is_zero());
        CHECK(Poly::divmod(b, d).second.is_zero());
        if (!common.is_zero()) CHECK(Poly::divmod(d, common.monic()).second.is_zero());

        const auto [h, u] = bax::gcd_with_cofactor(a, b);
        CHECK(Poly::divmod(u * a - h, b).second.is_zero());
    }
}

TEST_CASE("evaluate") {
    CHECK(P({1, 2, 3}).evaluate(Rational(2)) == 17);
    CHECK(Poly().evaluate(Rational(5)) == 0);
}

}
