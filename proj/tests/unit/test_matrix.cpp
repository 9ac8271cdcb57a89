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
#include "bax/matrix.hpp"
#include "bax/relation.hpp"
#include "bax/taft.hpp"
#include "bax/uqsl2.hpp"
#include "generators.hpp"

using namespace bax;

namespace {

ParamMatrix random_matrix(testing::Gen& g, std::size_t n, const Field& f) {
    ParamMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (g.integer(0, 2) == 0) m.set(r, c, g.mu_polynomial(f, 2));
    return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("sparse storage") {
    ParamMatrix m(3, 3);
    m.set(0, 1, ParamScalar(2));
    m.add(0, 1, ParamScalar(-2));
    CHECK(m.is_zero());
    CHECK_THROWS_AS(m.at(3, 0), InvalidParameter);
    m.set(2, 2, ParamScalar::mu());
    CHECK(m.has_parameters());
    CHECK_FALSE(m.has_nu());
    CHECK(m.str() == "(3,3) mu\n");
    CHECK_THROWS_AS(m.to_dense(), DomainError);
    CHECK(ParamMatrix(DenseMatrix::identity(3)) == ParamMatrix::identity(3));
}

TEST_CASE("property: product is associative and distributes; kron is multiplicative") {
    testing::Gen g(51);
    const Field f = Field::cyclotomic(5);
    for (int trial = 0; trial < 20; ++trial) {
        const ParamMatrix a = random_matrix(g, 3, f), b = random_matrix(g, 3, f), c = random_matrix(g, 3, f);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(ParamMatrix::identity(3) * a == a);
        const ParamMatrix d = random_matrix(g, 2, f), e = random_matrix(g, 2, f);
        CHECK(kron(a, d) * kron(b, e) == kron(a * b, d * e));
        const ParamSubstitution sub{{{1, 0}, {1, 0}}};
        CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    }
}

TEST_CASE("normalization by the first entry") {
    ParamMatrix m = ParamMatrix::identity(2) * ParamScalar(Scalar(4));
    m.set(0, 1, ParamScalar::mu() * Scalar(2));
    const ParamMatrix n = normalize_first_entry(m);
    CHECK(n.at(0, 0) == ParamScalar(1));
    CHECK(n.at(0, 1) == ParamScalar::mu() * Scalar(Rational(1, 2)));
    m.set(0, 0, ParamScalar::mu());
    CHECK_THROWS_AS(normalize_first_entry(m), DomainError);
}

TEST_CASE("property: diagonal conjugation is recovered") {
    testing::Gen g(53);
    const Field f = Field::cyclotomic(8);
    const ParamMatrix base = uqsl2_r_matrix(spin_one(), true);
    const Scalar z = Scalar::generator(Field::cyclotomic(8));
    const ParamMatrix b = base.map_entries([&](const ParamScalar& v) {
        return v.map_coefficients([&](const Scalar& c) { return c.substitute_generator(z); });
    });
    for (int trial = 0; trial < 20; ++trial) {
        const Scalar lambda = g.nonzero_scalar(f);
        std::vector<Scalar> diag;
        for (int i = 0; i < 9; ++i) diag.push_back(g.nonzero_scalar(f));
        ParamMatrix a(9, 9);
        for (std::size_t r = 0; r < 9; ++r)
            for (const auto& [c, v] : b.row(r)) a.set(r, c, v * (lambda * diag[r] / diag[c]));
        const RelationSearch s = find_diagonal_relation(a, b);
        REQUIRE(s.relation.has_value());
        CHECK(s.relation->lambda == lambda);
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c)
                CHECK(a.at(r, c) == b.at(r, c) * (s.relation->lambda * s.relation->g[r] / s.relation->g[c]));
    }
}

TEST_CASE("relation search failures") {
    const ParamMatrix b = uqsl2_r_matrix(spin_half(), true);
    ParamMatrix a = b;
    a.set(0, 3, ParamScalar(1));
    CHECK_FALSE(find_diagonal_relation(a, b).relation.has_value());
    ParamMatrix c = b;
    c.set(3, 3, c.at(3, 3) * ParamScalar(2));  // diagonal no longer proportional
    const RelationSearch s = find_diagonal_relation(c, b);
    CHECK_FALSE(s.relation.has_value());
    CHECK_FALSE(s.reason.empty());
    ParamMatrix d = b;
    d.set(1, 2, ParamScalar::mu(2));  // different mu power
    CHECK_FALSE(find_diagonal_relation(d, b).relation.has_value());
}

}
