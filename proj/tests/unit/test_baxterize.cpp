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

#include "bax/baxterize.hpp"
#include "bax/double.hpp"
#include "bax/errors.hpp"
#include "bax/taft.hpp"
#include "generators.hpp"

using namespace bax;

TEST_SUITE("baxterize") {

TEST_CASE("Taft canonical element splits by x-degree") {
    const TaftAlgebra t = build_taft(4, taft_root(4));
    const GradedRElement g = taft_graded_r(t);
    CHECK(g.components.size() == 4);
    for (int j = 0; j < 4; ++j) {
        const TensorElement& rj = g.components.at({j});
        CHECK(rj.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(rj.coefficient({t.index(i, j), t.index(i, j)}) == Scalar(1));
    }
    CHECK(g.sum() == g.r);

    const ParamTensor rmu = baxterize(g);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(rmu.coefficient({t.index(i, j), t.index(i, j)}) == ParamScalar::mu(j));
    CHECK(evaluate_at_one(rmu) == g.r);
    CHECK(degree_zero_part(g) == g.components.at({0}));
}

TEST_CASE("off-diagonal terms are rejected with their labels") {
    const TaftAlgebra t = build_taft(3, taft_root(3));
    TensorElement r(2);
    r.add_term({t.index(0, 1), t.index(0, 0)}, Scalar(1));  // x (x) e^*
    try {
        decompose_graded(r, t.grading, t.grading, &t.hopf.algebra);
        FAIL("expected NotDiagonallyGraded");
    } catch (const NotDiagonallyGraded& e) {
        CHECK(std::string(e.what()).find("a^0x^1") != std::string::npos);
    }
}

TEST_CASE("degree-zero input carries no parameter") {
    const TaftAlgebra t = build_taft(3, taft_root(3));
    TensorElement r(2);
    r.add_term({t.index(0, 0), t.index(0, 0)}, Scalar(1));
    r.add_term({t.index(2, 0), t.index(1, 0)}, Scalar(5));
    const ParamTensor rmu = baxterize(decompose_graded(r, t.grading, t.grading));
    CHECK(rmu == promote(r));
}

TEST_CASE("Z^n variant") {
    const TaftAlgebra t = build_taft(3, taft_root(3));
    const GradedRElement g1 = taft_graded_r(t);
    // rank 1 with tau = identity
    CHECK(baxterize_zn(g1, linear_degree_map({1})) == baxterize(g1));
    // tau = 0 embeds the constant element
    CHECK(baxterize_zn(g1, linear_degree_map({0})) == promote(g1.r));
    // tau = 2 * degree doubles every exponent
    const ParamTensor doubled = baxterize_zn(g1, linear_degree_map({2}));
    for (const auto& [k, c] : doubled.terms()) CHECK(c == ParamScalar::mu(2 * t.grading.integer_degree(k[0])));

    // non-additive maps are caught on component degrees
    const DegreeMap square = [](const Degree& p) { return p[0] * p[0]; };
    CHECK_THROWS_AS(baxterize_zn(g1, square), InvalidParameter);
    const DegreeMap shifted = [](const Degree& p) { return p[0] + 1; };
    CHECK_THROWS_AS(baxterize_zn(g1, shifted), InvalidParameter);
    CHECK_THROWS_AS(baxterize(decompose_graded(g1.r, Grading(std::vector<Degree>(9, {0, 0})),
                                               Grading(std::vector<Degree>(9, {0, 0})))),
                    InvalidParameter);
}

TEST_CASE("negative degrees give Laurent exponents") {
    const TaftAlgebra t = build_taft(3, taft_root(3));
    std::vector<int> negated;
    for (const Degree& d : t.grading.degrees()) negated.push_back(-d[0]);
    const Grading g = Grading::integer(negated);
    const ParamTensor rmu = baxterize(decompose_graded(taft_canonical_r(t), g, g));
    CHECK(rmu.coefficient({t.index(1, 2), t.index(1, 2)}) == ParamScalar::mu(-2));
}

TEST_CASE("property: homogeneity transport in the triple product") {
    // In R12(mu) R13(mu nu) R23(nu), every term's mu-exponent is the degree of
    // slot 1 and its nu-exponent the degree of slot 3.
    for (int N : {2, 3}) {
        const TaftAlgebra t = build_taft(N, taft_root(N));
        const DrinfeldDouble d = build_double(t.hopf);
        const auto n = static_cast<BasisIndex>(t.hopf.dim());
        const auto deg = [&](BasisIndex x) { return t.grading.integer_degree(x / n) + t.grading.integer_degree(x % n); };
        const auto report = check_parametric_ybe_algebraic(d, to_double(d, baxterize(taft_graded_r(t))));
        CHECK(report.passed);
        CHECK_FALSE(report.lhs.is_zero());
        for (const auto& [k, c] : report.lhs.terms())
            for (const auto& [e, coeff] : c.terms()) {
                CHECK(e[0] == deg(k[0]));
                CHECK(e[1] == deg(k[2]));
            }
    }
}

TEST_CASE("property: decomposition round trip on random diagonal elements") {
    const TaftAlgebra t = build_taft(4, taft_root(4));
    testing::Gen g(31);
    for (int trial = 0; trial < 30; ++trial) {
        TensorElement r(2);
        for (int k = 0; k < 6; ++k) {
            const int j = g.integer(0, 3);
            r.add_term({t.index(g.integer(0, 3), j), t.index(g.integer(0, 3), j)}, g.scalar(t.q.field()));
        }
        const GradedRElement gr = decompose_graded(r, t.grading, t.grading);
        CHECK(gr.sum() == r);
        CHECK(evaluate_at_one(baxterize(gr)) == r);
        for (const auto& [p, comp] : gr.components)
            for (const auto& [k, c] : comp.terms()) {
                CHECK(t.grading.degree(k[0]) == p);
                CHECK(t.grading.degree(k[1]) == p);
            }
    }
}

}
