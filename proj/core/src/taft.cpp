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

#include "bax/taft.hpp"

#include <string>

#include "bax/errors.hpp"
#include "bax/qnumbers.hpp"

namespace bax {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

void check_label(const TaftAlgebra& t, int v, const char* name) {
    if (v < 1 || v > t.N)
        throw InvalidParameter(std::string("representation label ") + name + " must lie in [1, " +
                               std::to_string(t.N) + "]");
}

/// prod_{m=lo}^{hi} (m)_q, 1 when empty.
Scalar bracket_product(int lo, int hi, const Scalar& q) {
    Scalar out(1);
    for (int m = lo; m <= hi; ++m) out *= q_bracket(m, q);
    return out;
}

std::vector<DenseMatrix> dual_part(const TaftAlgebra& t, int n, int l) {
    const int N = t.N;
    std::vector<DenseMatrix> out(N * N, DenseMatrix(n, n));
    for (int m = 0; m < N; ++m) {
        int i = mod(m - l + 1, N);
        if (i == 0) i = N;
        for (int j = 0; j < N; ++j) {
            if (i > n - j) continue;
            DenseMatrix& e = out[t.index(m, j)];
            e(i + j - 1, i - 1) = q_bracket_factorial(j, t.q).inverse();
        }
    }
    return out;
}

}  // namespace

Scalar taft_root(int N, int k) {
    if (N < 2) throw InvalidParameter("taft_root: N must be at least 2");
    return Scalar::generator(Field::cyclotomic(N)).pow(k);
}

bool is_primitive_root(const Scalar& q, int N) {
    if (N < 1 || q.is_zero()) return false;
    Scalar p(1);
    for (int k = 1; k < N; ++k) {
        p *= q;
        if (p.is_one()) return false;
    }
    return (p * q).is_one();
}

TaftAlgebra build_taft(int N, const Scalar& q) {
    if (N < 2) throw InvalidParameter("build_taft: N must be at least 2");
    if (!is_primitive_root(q, N))
        throw InvalidParameter("build_taft: q = " + q.str() + " is not a primitive " + std::to_string(N) +
                               "-th root of unity");
    TaftAlgebra t;
    t.N = N;
    t.q = q;
    const std::size_t dim = static_cast<std::size_t>(N) * N;

    std::vector<std::string> labels(dim);
    std::vector<int> degrees(dim);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            labels[t.index(i, j)] = "a^" + std::to_string(i) + "x^" + std::to_string(j);
            degrees[t.index(i, j)] = j;
        }

    // (a^i x^j)(a^k x^l) = q^{jk} a^{i+k} x^{j+l}
    std::vector<AlgebraElement> table(dim * dim);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    if (j + l >= N) continue;
                    table[t.index(i, j) * dim + t.index(k, l)].add_term(t.index(mod(i + k, N), j + l),
                                                                        q.pow(static_cast<long>(j) * k));
                }
    FiniteAlgebra algebra("T(" + std::to_string(N) + "," + q.str() + ")", labels, q.field(), std::move(table),
                          AlgebraElement::basis(t.index(0, 0)));

    std::vector<TensorElement> coproduct(dim, TensorElement(2));
    std::vector<Scalar> counit(dim);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k <= j; ++k)
                coproduct[t.index(i, j)].add_term({t.index(mod(j - k + i, N), k), t.index(i, j - k)},
                                                  gauss_binomial(j, k, q));
            counit[t.index(i, j)] = Scalar(j == 0 ? 1 : 0);
        }

    // S(a^i x^j) = S(x)^j S(a)^i with S(a) = a^{-1}, S(x) = -a^{-1} x
    const AlgebraElement s_a = algebra.basis(t.index(N - 1, 0));
    const AlgebraElement s_x = algebra.basis(t.index(N - 1, 1)) * Scalar(-1);
    std::vector<AlgebraElement> antipode(dim);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            AlgebraElement v = algebra.unit();
            for (int r = 0; r < j; ++r) v = multiply(v, s_x, algebra);
            for (int r = 0; r < i; ++r) v = multiply(v, s_a, algebra);
            antipode[t.index(i, j)] = v;
        }

    t.hopf = HopfAlgebra{std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode)};
    t.grading = Grading::integer(degrees);
    return t;
}

DoubleRepresentation rep_irreducible(const TaftAlgebra& t, int n, int l) {
    check_label(t, n, "n");
    check_label(t, l, "l");
    const int N = t.N;
    const Scalar& q = t.q;
    DoubleRepresentation rep;
    rep.name = "pi_{" + std::to_string(n) + "," + std::to_string(l) + "}";
    rep.dim = static_cast<std::size_t>(n);
    rep.on_base.assign(N * N, DenseMatrix(n, n));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 1; k <= n - j; ++k) {
                Scalar c = q.pow(static_cast<long>(k - l - n) * i) * bracket_product(k, k + j - 1, q);
                for (int p = 0; p < j; ++p) c *= Scalar(1) - q.pow(p + k - n);
                rep.on_base[t.index(i, j)](k - 1, k + j - 1) = c;
            }
    rep.on_dual = dual_part(t, n, l);
    return rep;
}

DoubleRepresentation rep_indecomposable(const TaftAlgebra& t, const Scalar& alpha, int l) {
    check_label(t, l, "l");
    const int N = t.N;
    const Scalar& q = t.q;
    DoubleRepresentation rep;
    rep.name = "pi_alpha(" + alpha.str() + "," + std::to_string(l) + ")";
    rep.dim = static_cast<std::size_t>(N);
    rep.on_base.assign(N * N, DenseMatrix(N, N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            DenseMatrix& m = rep.on_base[t.index(i, j)];
            if (j >= 1) {
                Scalar c = alpha * q.pow(-static_cast<long>(i) * (j + l)) * bracket_product(N - j, N - 2, q);
                for (int p = 1; p < j; ++p) c *= Scalar(1) - q.pow(-p);
                m(N - j, 0) += c;
            }
            for (int k = 1; k <= N - j; ++k) {
                Scalar c = q.pow(static_cast<long>(i) * (k - 1 - l)) * bracket_product(k - 1, k + j - 2, q);
                for (int p = 0; p < j; ++p) c *= Scalar(1) - q.pow(k + p);
                m(k - 1, k + j - 1) += c;
            }
        }
    rep.on_dual = dual_part(t, N, l);
    return rep;
}

TensorElement taft_canonical_r(const TaftAlgebra& t) {
    TensorElement r(2);
    for (BasisIndex i = 0; i < t.hopf.dim(); ++i) r.add_term({i, i}, Scalar(1));
    return r;
}

GradedRElement taft_graded_r(const TaftAlgebra& t) {
    return decompose_graded(taft_canonical_r(t), t.grading, dual_grading(t.hopf, t.grading), &t.hopf.algebra);
}

ParamMatrix taft_r_matrix(const TaftAlgebra& t, const DoubleRepresentation& rep, bool parametric) {
    if (rep.on_base.size() != t.hopf.dim()) throw AlgebraMismatch("representation does not match the Taft algebra");
    if (!parametric) return represent(taft_canonical_r(t), rep);
    return represent(baxterize(taft_graded_r(t)), rep);
}

}  // namespace bax
