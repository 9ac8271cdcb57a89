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

#include "bax/representation.hpp"

#include "bax/errors.hpp"

namespace bax {
namespace {

DenseMatrix combine(const AlgebraElement& x, std::size_t dim, const auto& image) {
    DenseMatrix out(dim, dim);
    for (const auto& [i, c] : x.terms()) out += image(i) * c;
    return out;
}

void expect(RepresentationReport& report, bool ok, const std::string& what) {
    if (ok) return;
    report.passed = false;
    report.failures.push_back(what);
}

}  // namespace

DenseMatrix DoubleRepresentation::apply_base(const AlgebraElement& h) const {
    return combine(h, dim, [&](BasisIndex i) { return on_base.at(i); });
}

DenseMatrix DoubleRepresentation::apply_dual(const AlgebraElement& f) const {
    return combine(f, dim, [&](BasisIndex i) { return on_dual.at(i); });
}

DenseMatrix DoubleRepresentation::apply_double(const AlgebraElement& x) const {
    const auto n = static_cast<BasisIndex>(on_base.size());
    return combine(x, dim, [&](BasisIndex i) { return on_double(i / n, i % n); });
}

RepresentationReport check_base_representation(const HopfAlgebra& h, const DoubleRepresentation& rep) {
    RepresentationReport report;
    if (rep.on_base.size() != h.dim()) throw AlgebraMismatch("representation does not match the algebra");
    const FiniteAlgebra& a = h.algebra;
    expect(report, rep.apply_base(a.unit()) == DenseMatrix::identity(rep.dim), "pi(1) != I");
    for (BasisIndex i = 0; i < h.dim(); ++i)
        for (BasisIndex j = 0; j < h.dim(); ++j)
            expect(report, rep.on_base[i] * rep.on_base[j] == rep.apply_base(a.product(i, j)),
                   "pi(" + a.label(i) + ") pi(" + a.label(j) + ") != pi(" + a.label(i) + " " + a.label(j) + ")");
    return report;
}

RepresentationReport check_representation(const DrinfeldDouble& d, const DoubleRepresentation& rep,
                                          bool exhaustive) {
    RepresentationReport report = check_base_representation(d.base, rep);
    const std::size_t n = d.base_dim();
    if (rep.on_dual.size() != n) throw AlgebraMismatch("representation does not match the double");
    const FiniteAlgebra& hs = d.dual.algebra;
    expect(report, rep.apply_dual(hs.unit()) == DenseMatrix::identity(rep.dim), "pi(1*) != I");
    for (BasisIndex f = 0; f < n; ++f)
        for (BasisIndex g = 0; g < n; ++g)
            expect(report, rep.on_dual[f] * rep.on_dual[g] == rep.apply_dual(hs.product(f, g)),
                   "dual product " + hs.label(f) + " " + hs.label(g));
    for (BasisIndex f = 0; f < n; ++f)
        for (BasisIndex h = 0; h < n; ++h)
            expect(report, rep.on_dual[f] * rep.on_base[h] == rep.apply_double(d.cross[f * n + h]),
                   "cross relation " + hs.label(f) + " . " + d.base.algebra.label(h));
    if (exhaustive) {
        const FiniteAlgebra& da = d.algebra();
        std::vector<DenseMatrix> image(da.dim());
        for (BasisIndex x = 0; x < da.dim(); ++x) image[x] = rep.on_double(x / n, x % n);
        for (BasisIndex x = 0; x < da.dim(); ++x)
            for (BasisIndex y = 0; y < da.dim(); ++y)
                expect(report, image[x] * image[y] == rep.apply_double(da.product(x, y)),
                       "pi(" + da.label(x) + ") pi(" + da.label(y) + ")");
    }
    return report;
}

ParamMatrix represent(const ParamTensor& t, const DoubleRepresentation& rep) {
    if (t.arity() != 2) throw ArityMismatch("represent: tensor must have arity 2");
    const std::size_t d = rep.dim;
    ParamMatrix out(d * d, d * d);
    for (const auto& [k, c] : t.terms()) {
        const DenseMatrix block = kron(rep.on_base.at(k[0]), rep.on_dual.at(k[1]));
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t col = 0; col < block.cols(); ++col)
                if (!block(r, col).is_zero()) out.add(r, col, c * block(r, col));
    }
    return out;
}

ParamMatrix represent(const TensorElement& t, const DoubleRepresentation& rep) {
    return represent(promote(t), rep);
}

}  // namespace bax
