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

#include <numeric>

#include "bax/errors.hpp"
#include "bax/taft.hpp"
#include "bax/ybe.hpp"

using namespace bax;

namespace {

/// Delta(a)^i Delta(x)^j by repeated products in T (x) T, independent of the closed formula.
TensorElement coproduct_from_generators(const TaftAlgebra& t, int i, int j) {
    const FiniteAlgebra& a = t.hopf.algebra;
    TensorElement da(2), dx(2), out(2);
    da.add_term({t.index(1, 0), t.index(1, 0)}, Scalar(1));
    dx.add_term({t.index(0, 1), t.index(0, 0)}, Scalar(1));
    dx.add_term({t.index(1, 0), t.index(0, 1)}, Scalar(1));
    out.add_term({0, 0}, Scalar(1));
    for (int k = 0; k < i; ++k) out = tensor_multiply(out, da, a);
    for (int k = 0; k < j; ++k) out = tensor_multiply(out, dx, a);
    return out;
}

bool support_is(const DenseMatrix& m, std::initializer_list<std::pair<int, int>> cells) {
    if (m.nonzeros() != cells.size()) return false;
    for (const auto& [r, c] : cells)
        if (m(r - 1, c - 1).is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("taft") {

TEST_CASE("generator coproducts") {
    const TaftAlgebra t = build_taft(4, taft_root(4));
    const Scalar& q = t.q;
    TensorElement da(2);
    da.add_term({t.index(1, 0), t.index(1, 0)}, Scalar(1));
    CHECK(t.hopf.coproduct[t.index(1, 0)] == da);

    // Delta(x^2) = x^2 (x) e + (1+q) ax (x) x + a^2 (x) x^2
    TensorElement dx2(2);
    dx2.add_term({t.index(0, 2), t.index(0, 0)}, Scalar(1));
    dx2.add_term({t.index(1, 1), t.index(0, 1)}, Scalar(1) + q);
    dx2.add_term({t.index(2, 0), t.index(0, 2)}, Scalar(1));
    CHECK(t.hopf.coproduct[t.index(0, 2)] == dx2);
    CHECK(coproduct_from_generators(t, 0, 2) == dx2);
}

TEST_CASE("antipode of x") {
    for (int N = 2; N <= 6; ++N) {
        const TaftAlgebra t = build_taft(N, taft_root(N));
        CHECK(t.hopf.antipode[t.index(0, 1)] == t.hopf.algebra.basis(t.index(N - 1, 1)) * Scalar(-1));
        CHECK(t.hopf.antipode[t.index(1, 0)] == t.hopf.algebra.basis(t.index(N - 1, 0)));
    }
}

TEST_CASE("relations") {
    const TaftAlgebra t = build_taft(5, taft_root(5, 2));
    const FiniteAlgebra& a = t.hopf.algebra;
    const AlgebraElement x = a.basis(t.index(0, 1)), ga = a.basis(t.index(1, 0));
    CHECK(multiply(x, ga, a) == multiply(ga, x, a) * t.q);
    AlgebraElement p = a.unit(), xp = a.unit();
    for (int k = 0; k < 5; ++k) {
        p = multiply(p, ga, a);
        xp = multiply(xp, x, a);
    }
    CHECK(p == a.unit());
    CHECK(xp.is_zero());
}

TEST_CASE("non-primitive parameters are rejected") {
    CHECK_THROWS_AS(build_taft(4, taft_root(4, 2)), InvalidParameter);
    CHECK_THROWS_AS(build_taft(6, taft_root(6, 3)), InvalidParameter);
    CHECK_THROWS_AS(build_taft(4, Scalar(1)), InvalidParameter);
    CHECK_THROWS_AS(build_taft(1, Scalar(1)), InvalidParameter);
    CHECK(is_primitive_root(taft_root(6, 5), 6));
    CHECK_FALSE(is_primitive_root(taft_root(6, 2), 6));
}

TEST_CASE("property: closed coproduct agrees with the homomorphism property") {
    for (int N = 2; N <= 5; ++N)
        for (int k = 1; k < N; ++k) {
            if (std::gcd(k, N) != 1) continue;
            const TaftAlgebra t = build_taft(N, taft_root(N, k));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    INFO("N=", N, " k=", k, " i=", i, " j=", j);
                    CHECK(t.hopf.coproduct[t.index(i, j)] == coproduct_from_generators(t, i, j));
                }
        }
}

TEST_CASE("property: Hopf axioms over all primitive roots") {
    for (int N = 2; N <= 6; ++N)
        for (int k = 1; k < N; ++k) {
            if (std::gcd(k, N) != 1) continue;
            INFO("N=", N, " k=", k);
            CHECK(check_hopf_axioms(build_taft(N, taft_root(N, k)).hopf).passed());
        }
}

TEST_CASE("irreducible representation shapes") {
    const TaftAlgebra t = build_taft(4, taft_root(4));
    for (int l = 1; l <= 4; ++l) {
        const DoubleRepresentation p = rep_irreducible(t, 3, l);
        CHECK(p.dim == 3);
        CHECK(p.on_base[t.index(0, 0)] == DenseMatrix::identity(3));
        CHECK(support_is(p.on_base[t.index(0, 1)], {{1, 2}, {2, 3}}));
        CHECK(p.on_base[t.index(2, 3)].is_zero());  // j >= n
        CHECK(p.on_base[t.index(1, 3)].is_zero());
    }
    CHECK_THROWS_AS(rep_irreducible(t, 5, 1), InvalidParameter);
    CHECK_THROWS_AS(rep_irreducible(t, 3, 0), InvalidParameter);
}

TEST_CASE("property: every representation respects the double's product") {
    for (int N : {2, 3}) {
        const TaftAlgebra t = build_taft(N, taft_root(N));
        const DrinfeldDouble d = build_double(t.hopf);
        for (int n = 1; n <= N; ++n)
            for (int l = 1; l <= N; ++l) {
                const RepresentationReport r = check_representation(d, rep_irreducible(t, n, l), true);
                INFO("N=", N, " n=", n, " l=", l);
                CHECK(r.passed);
            }
        for (int l = 1; l <= N; ++l) {
            const RepresentationReport r = check_representation(d, rep_indecomposable(t, Scalar(3), l), true);
            CHECK(r.passed);
        }
    }
    const TaftAlgebra t = build_taft(4, taft_root(4, 3));
    const DrinfeldDouble d = build_double(t.hopf);
    for (int n = 1; n <= 4; ++n)
        for (int l = 1; l <= 4; ++l) CHECK(check_representation(d, rep_irreducible(t, n, l)).passed);
    CHECK(check_representation(d, rep_indecomposable(t, Scalar(Rational(-1, 2)), 2)).passed);
}

TEST_CASE("indecomposable representation") {
    const TaftAlgebra t = build_taft(4, taft_root(4));
    const Scalar alpha(5);
    for (int l = 1; l <= 4; ++l) {
        const DoubleRepresentation p = rep_indecomposable(t, alpha, l);
        CHECK(p.dim == 4);
        CHECK(p.on_base[t.index(0, 0)] == DenseMatrix::identity(4));
        // pi(a) = diag(q^{k-1-l})
        std::vector<Scalar> diag;
        for (int k = 1; k <= 4; ++k) diag.push_back(t.q.pow(k - 1 - l));
        CHECK(p.on_base[t.index(1, 0)] == DenseMatrix::diagonal(diag));
        const DenseMatrix& x = p.on_base[t.index(0, 1)];
        const DenseMatrix& a = p.on_base[t.index(1, 0)];
        CHECK(x * a == a * x * t.q);
        CHECK(x.pow(4).is_zero());
        CHECK_FALSE(x.pow(3).is_zero());  // the wrap term keeps x^3 alive
        CHECK(check_base_representation(t.hopf, p).passed);
    }
    // alpha = 0 leaves a strictly upper triangular x
    const DenseMatrix x0 = rep_indecomposable(t, Scalar(0), 1).on_base[t.index(0, 1)];
    CHECK(x0(3, 0).is_zero());
}

TEST_CASE("9x9 R-matrix entries") {
    const TaftAlgebra t = build_taft(4, taft_root(4));
    const Scalar& q = t.q;
    for (int l = 1; l <= 4; ++l) {
        const ParamMatrix r = normalize_first_entry(taft_r_matrix(t, rep_irreducible(t, 3, l), true));
        CHECK(r.at(1, 1) == ParamScalar(q.pow(-l - 2)));
        CHECK(r.at(2, 6) == ParamScalar::mu(2) * ((Scalar(1) - q.inverse()) * (Scalar(1) - q.pow(-2))));
        CHECK(r.at(4, 6) == ParamScalar::mu() * (q.pow(l + 1) * (Scalar(1) - q.pow(-2))));
        CHECK(r.nonzeros() == 14);
    }
}

TEST_CASE("property: R-matrices solve both Yang-Baxter equations") {
    for (int N : {3, 4, 5}) {
        const TaftAlgebra t = build_taft(N, taft_root(N));
        for (int n = 1; n <= N; ++n) {
            const DoubleRepresentation p = rep_irreducible(t, n, 1 + (n % N));
            CHECK(check_parametric_ybe(taft_r_matrix(t, p, true)).passed);
            CHECK(check_constant_ybe(taft_r_matrix(t, p, false)).passed);
        }
        const DoubleRepresentation pa = rep_indecomposable(t, Scalar(2), 1);
        CHECK(check_parametric_ybe(taft_r_matrix(t, pa, true)).passed);
    }
}

}
