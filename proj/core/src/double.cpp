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

#include "bax/double.hpp"

#include "bax/dense_matrix.hpp"

namespace bax {

namespace {

std::vector<AlgebraElement> invert_antipode(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    DenseMatrix s(n, n);
    for (BasisIndex j = 0; j < n; ++j)
        for (const auto& [i, c] : h.antipode[j].terms()) s(i, j) = c;
    const auto inv = s.inverse();
    if (!inv) throw NonInvertibleAntipode("antipode of " + h.algebra.name() + " is not invertible");
    std::vector<AlgebraElement> out(n, AlgebraElement(h.algebra.space()));
    for (BasisIndex j = 0; j < n; ++j)
        for (BasisIndex i = 0; i < n; ++i) out[j].add_term(i, (*inv)(i, j));
    return out;
}

}  // namespace

AlgebraElement DrinfeldDouble::embed_base(const AlgebraElement& h) const {
    base.algebra.check_member(h);
    AlgebraElement out(hopf.algebra.space());
    for (const auto& [g, c] : h.terms())
        for (const auto& [f, e] : dual.algebra.unit().terms()) out.add_term(index(g, f), c * e);
    return out;
}

AlgebraElement DrinfeldDouble::embed_dual(const AlgebraElement& f) const {
    dual.algebra.check_member(f);
    AlgebraElement out(hopf.algebra.space());
    for (const auto& [g, u] : base.algebra.unit().terms())
        for (const auto& [k, c] : f.terms()) out.add_term(index(g, k), u * c);
    return out;
}

DrinfeldDouble build_double(const HopfAlgebra& h) {
    DrinfeldDouble d;
    d.base = h;
    d.dual = dual(h);
    d.antipode_inverse = invert_antipode(h);

    const FiniteAlgebra& ha = d.base.algebra;
    const FiniteAlgebra& da = d.dual.algebra;
    const auto n = static_cast<BasisIndex>(h.dim());
    const auto idx = [n](BasisIndex g, BasisIndex f) { return g * n + f; };

    // f^* . h, expanded as sum over Delta^(2)(h) = h1 (x) h2 (x) h3.
    d.cross.assign(static_cast<std::size_t>(n) * n, AlgebraElement());
    for (BasisIndex r = 0; r < n; ++r) {
        const TensorElement delta2 = d.base.double_coproduct(r);
        for (const auto& [key, c] : delta2.terms()) {
            const BasisIndex h1 = key[0], h2 = key[1], h3 = key[2];
            for (BasisIndex z = 0; z < n; ++z) {
                const AlgebraElement& h3z = ha.product(h3, z);
                if (h3z.is_zero()) continue;
                const AlgebraElement value = multiply(h3z, d.antipode_inverse[h1], ha);
                for (const auto& [f, v] : value.terms()) d.cross[idx(f, r)].add_term(idx(h2, z), c * v);
            }
        }
    }

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n) * n);
    for (BasisIndex g = 0; g < n; ++g)
        for (BasisIndex f = 0; f < n; ++f) labels.push_back(ha.label(g) + "." + da.label(f));

    // (g f)(h f') = g (f h) f'
    std::vector<AlgebraElement> table(static_cast<std::size_t>(n) * n * n * n);
    for (BasisIndex g = 0; g < n; ++g)
        for (BasisIndex f = 0; f < n; ++f)
            for (BasisIndex hh = 0; hh < n; ++hh) {
                const AlgebraElement& fh = d.cross[idx(f, hh)];
                for (BasisIndex f2 = 0; f2 < n; ++f2) {
                    AlgebraElement& entry = table[static_cast<std::size_t>(idx(g, f)) * n * n + idx(hh, f2)];
                    for (const auto& [vz, c] : fh.terms()) {
                        const BasisIndex v = vz / n, z = vz % n;
                        const AlgebraElement& gv = ha.product(g, v);
                        const AlgebraElement& zf = da.product(z, f2);
                        for (const auto& [a, ca] : gv.terms())
                            for (const auto& [b, cb] : zf.terms()) entry.add_term(idx(a, b), c * ca * cb);
                    }
                }
            }

    AlgebraElement unit;
    for (const auto& [g, u] : ha.unit().terms())
        for (const auto& [f, e] : da.unit().terms()) unit.add_term(idx(g, f), u * e);

    FiniteAlgebra algebra("D(" + ha.name() + ")", std::move(labels), ha.field(), std::move(table), std::move(unit));

    std::vector<TensorElement> coproduct(static_cast<std::size_t>(n) * n, TensorElement(2));
    std::vector<Scalar> counit(static_cast<std::size_t>(n) * n);
    for (BasisIndex g = 0; g < n; ++g)
        for (BasisIndex f = 0; f < n; ++f) {
            auto& delta = coproduct[idx(g, f)];
            for (const auto& [kg, cg] : d.base.coproduct[g].terms())
                for (const auto& [kf, cf] : d.dual.coproduct[f].terms())
                    delta.add_term({idx(kg[0], kf[1]), idx(kg[1], kf[0])}, cg * cf);
            counit[idx(g, f)] = d.base.counit[g] * d.dual.counit[f];
        }

    d.hopf.algebra = std::move(algebra);
    d.hopf.coproduct = std::move(coproduct);
    d.hopf.counit = std::move(counit);

    // S(g f) = S_{H*cop}(f) S(g), where S_{H*cop} is the inverse of the dual antipode,
    // i.e. the transpose of S^{-1}.
    const FiniteAlgebra& dd = d.hopf.algebra;
    std::vector<AlgebraElement> dual_sinv(n, AlgebraElement(da.space()));
    for (BasisIndex j = 0; j < n; ++j)
        for (const auto& [i, c] : d.antipode_inverse[j].terms()) dual_sinv[i].add_term(j, c);
    d.hopf.antipode.assign(static_cast<std::size_t>(n) * n, AlgebraElement(dd.space()));
    for (BasisIndex g = 0; g < n; ++g)
        for (BasisIndex f = 0; f < n; ++f)
            d.hopf.antipode[idx(g, f)] =
                multiply(d.embed_dual(dual_sinv[f]), d.embed_base(d.base.antipode[g]), dd);
    return d;
}

CanonicalR canonical_r(const DrinfeldDouble& d) {
    CanonicalR r;
    const auto n = static_cast<BasisIndex>(d.base_dim());
    for (BasisIndex i = 0; i < n; ++i) r.hopf_form.add_term({i, i}, Scalar(1));
    r.double_form = to_double(d, r.hopf_form);
    return r;
}

template <class C>
Tensor<C> to_double(const DrinfeldDouble& d, const Tensor<C>& hopf_form) {
    if (hopf_form.arity() != 2) throw ArityMismatch("to_double: expected an element of H (x) H^*");
    Tensor<C> out(2);
    for (const auto& [k, c] : hopf_form.terms()) {
        const AlgebraElement left = d.embed_base(d.base.algebra.basis(k[0]));
        const AlgebraElement right = d.embed_dual(d.dual.algebra.basis(k[1]));
        for (const auto& [i, a] : left.terms())
            for (const auto& [j, b] : right.terms()) out.add_term({i, j}, c * (a * b));
    }
    return out;
}

template TensorElement to_double(const DrinfeldDouble&, const TensorElement&);
template ParamTensor to_double(const DrinfeldDouble&, const ParamTensor&);

ParamTensor substitute(const ParamTensor& t, const ParamSubstitution& sub) {
    ParamTensor out(t.arity());
    for (const auto& [k, c] : t.terms()) out.add_term(k, c.substitute(sub));
    return out;
}

namespace {

template <class C>
AlgebraicYbeReport<C> ybe_from_legs(const DrinfeldDouble& d, const Tensor<C>& r12, const Tensor<C>& r13,
                                    const Tensor<C>& r23) {
    const FiniteAlgebra& a = d.algebra();
    const std::vector<const FiniteAlgebra*> slots(3, &a);
    const std::span<const FiniteAlgebra* const> s(slots);
    const Tensor<C> e12 = embed(r12, 1, 2, s);
    const Tensor<C> e13 = embed(r13, 1, 3, s);
    const Tensor<C> e23 = embed(r23, 2, 3, s);
    AlgebraicYbeReport<C> report;
    report.lhs = tensor_multiply(tensor_multiply(e12, e13, s), e23, s);
    const Tensor<C> rhs = tensor_multiply(tensor_multiply(e23, e13, s), e12, s);
    report.difference = report.lhs - rhs;
    report.passed = report.difference.is_zero();
    return report;
}

}  // namespace

AlgebraicYbeReport<Scalar> check_constant_ybe_algebraic(const DrinfeldDouble& d, const TensorElement& r) {
    return ybe_from_legs(d, r, r, r);
}

AlgebraicYbeReport<ParamScalar> check_parametric_ybe_algebraic(const DrinfeldDouble& d, const ParamTensor& r) {
    const ParamTensor r13 = substitute(r, ParamSubstitution{{{1, 0}, {1, 0}}});
    const ParamTensor r23 = substitute(r, ParamSubstitution{{{0, 0}, {1, 0}}});
    return ybe_from_legs(d, r, r13, r23);
}

}  // namespace bax
