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

#include "bax/uqsl2.hpp"

#include "bax/errors.hpp"
#include "bax/qnumbers.hpp"

namespace bax {
namespace {

const Field kField = Field::rational_function();

Scalar s_gen() { return Scalar::generator(kField); }
Scalar q_gen() { return Scalar::q(kField); }

DenseMatrix raising(std::size_t d) {
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) m(i, i + 1) = Scalar(1);
    return m;
}

WeightedRep make_rep(std::string name, std::vector<int> weights, Scalar prefactor_square) {
    WeightedRep rep;
    rep.name = std::move(name);
    rep.dim = weights.size();
    rep.e_core = raising(rep.dim);
    rep.f_core = rep.e_core.transpose();
    std::vector<Scalar> diag(weights.begin(), weights.end());
    rep.h = DenseMatrix::diagonal(diag);
    rep.weights = std::move(weights);
    rep.prefactor_square = std::move(prefactor_square);
    return rep;
}

void expect(WeightedRepReport& report, bool ok, const std::string& what) {
    if (ok) return;
    report.passed = false;
    report.failures.push_back(what);
}

/// Coefficient q^{n(n+1)/2} (1-q^-2)^n / [n]_q!; q^{1/2} = s.
Scalar series_coefficient(int n) {
    const Scalar q = q_gen();
    return s_gen().pow(static_cast<long>(n) * (n + 1)) * (Scalar(1) - q.pow(-2)).pow(n) /
           q_number_factorial(n, q);
}

bool weight_homogeneous(const WeightedRep& rep, const DenseMatrix& m, int shift) {
    for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j)
            if (!m(i, j).is_zero() && rep.weights[i] - rep.weights[j] != shift) return false;
    return true;
}

}  // namespace

WeightedRep spin_half() { return make_rep("spin-1/2", {1, -1}, Scalar(1)); }

WeightedRep spin_one() {
    const Scalar q = q_gen();
    return make_rep("spin-1", {2, 0, -2}, q + q.inverse());
}

WeightedRepReport check_weighted_rep(const WeightedRep& rep) {
    WeightedRepReport report;
    const std::size_t d = rep.dim;
    const auto comm = [](const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; };
    const DenseMatrix& e = rep.e_core;
    const DenseMatrix& f = rep.f_core;
    expect(report, rep.h == DenseMatrix::diagonal(std::vector<Scalar>(rep.weights.begin(), rep.weights.end())),
           "h is not diag(weights)");
    expect(report, comm(rep.h, e) == e * Scalar(2), "[h,e] != 2e");
    expect(report, comm(rep.h, f) == f * Scalar(-2), "[h,f] != -2f");
    std::vector<Scalar> bracket;
    for (int w : rep.weights) bracket.push_back(q_number(w, q_gen()));
    expect(report, comm(e, f) * rep.prefactor_square == DenseMatrix::diagonal(bracket),
           "[e,f] != (q^h - q^-h)/(q - q^-1)");
    expect(report, e.pow(static_cast<unsigned>(d)).is_zero(), "e^d != 0");
    expect(report, f.pow(static_cast<unsigned>(d)).is_zero(), "f^d != 0");
    return report;
}

GradedRElement uqsl2_term_grading(const WeightedRep& rep) {
    const int d = static_cast<int>(rep.dim);
    TensorElement terms(2);
    std::vector<int> degrees;
    for (int n = 0; n < d; ++n) {
        terms.add_term({static_cast<BasisIndex>(n), static_cast<BasisIndex>(n)}, series_coefficient(n));
        degrees.push_back(n);
    }
    const Grading g = Grading::integer(degrees);
    return decompose_graded(terms, g, g);
}

WeightedRepReport check_term_grading(const WeightedRep& rep) {
    WeightedRepReport report;
    const int d = static_cast<int>(rep.dim);
    expect(report, weight_homogeneous(rep, rep.h, 0), "h is not of degree 0");
    for (int m = 0; m < d; ++m) {
        const DenseMatrix em = rep.e_core.pow(m);
        const DenseMatrix fm = rep.f_core.pow(m);
        expect(report, weight_homogeneous(rep, em, 2 * m), "e^" + std::to_string(m) + " is not of degree " +
                                                                   std::to_string(m));
        expect(report, weight_homogeneous(rep, fm, -2 * m), "f^" + std::to_string(m) + " is not of degree " +
                                                                    std::to_string(m));
        expect(report, weight_homogeneous(rep, rep.h * em, 2 * m), "h e^" + std::to_string(m) + " not homogeneous");
        for (int n = 0; n < d; ++n) {
            expect(report, weight_homogeneous(rep, em * rep.e_core.pow(n), 2 * (m + n)),
                   "e^" + std::to_string(m) + " e^" + std::to_string(n) + " not homogeneous");
            expect(report, weight_homogeneous(rep, fm * rep.f_core.pow(n), -2 * (m + n)),
                   "f^" + std::to_string(m) + " f^" + std::to_string(n) + " not homogeneous");
        }
    }
    return report;
}

DenseMatrix cartan_factor(const WeightedRep& rep) {
    std::vector<Scalar> diag;
    const Scalar s = s_gen();
    for (int wi : rep.weights)
        for (int wj : rep.weights) diag.push_back(s.pow(static_cast<long>(wi) * wj));
    return DenseMatrix::diagonal(diag);
}

ParamMatrix uqsl2_r_matrix(const WeightedRep& rep, bool parametric) {
    const GradedRElement graded = uqsl2_term_grading(rep);
    const ParamTensor series = parametric ? baxterize(graded) : promote(graded.r);
    const DenseMatrix cartan = cartan_factor(rep);
    const std::size_t dd = rep.dim * rep.dim;
    ParamMatrix out(dd, dd);
    for (const auto& [k, coeff] : series.terms()) {
        const int n = static_cast<int>(k[0]);
        const DenseMatrix block = cartan * kron(rep.e_core.pow(n), rep.f_core.pow(n));
        const Scalar c = rep.prefactor_square.pow(n);
        for (std::size_t r = 0; r < dd; ++r)
            for (std::size_t col = 0; col < dd; ++col)
                if (!block(r, col).is_zero()) out.add(r, col, coeff * (c * block(r, col)));
    }
    return out;
}

}  // namespace bax
