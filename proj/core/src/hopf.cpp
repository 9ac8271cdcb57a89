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

#include "bax/hopf.hpp"

#include <stdexcept>

namespace bax {

TensorElement HopfAlgebra::apply_coproduct(const AlgebraElement& x) const {
    algebra.check_member(x);
    TensorElement out(2);
    for (const auto& [i, c] : x.terms())
        for (const auto& [k, d] : coproduct[i].terms()) out.add_term(k, c * d);
    return out;
}

Scalar HopfAlgebra::apply_counit(const AlgebraElement& x) const {
    algebra.check_member(x);
    Scalar out;
    for (const auto& [i, c] : x.terms()) out += c * counit[i];
    return out;
}

AlgebraElement HopfAlgebra::apply_antipode(const AlgebraElement& x) const {
    algebra.check_member(x);
    AlgebraElement out(algebra.space());
    for (const auto& [i, c] : x.terms()) out += antipode[i] * c;
    return out;
}

TensorElement HopfAlgebra::double_coproduct(BasisIndex i) const {
    TensorElement out(3);
    for (const auto& [k, c] : coproduct.at(i).terms())
        for (const auto& [k2, c2] : coproduct[k[0]].terms()) out.add_term({k2[0], k2[1], k[1]}, c * c2);
    return out;
}

bool HopfReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult& HopfReport::at(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("no check named " + name);
}

namespace {

void fail(CheckResult& r, const std::string& what) {
    if (!r.passed) return;
    r.passed = false;
    r.counterexample = what;
}

CheckResult check_algebra_laws(const HopfAlgebra& h) {
    const FiniteAlgebra& a = h.algebra;
    const auto n = static_cast<BasisIndex>(a.dim());
    CheckResult r{"associativity/unit", true, {}};
    for (BasisIndex i = 0; i < n && r.passed; ++i) {
        const AlgebraElement bi = a.basis(i);
        if (!(multiply(a.unit(), bi, a) == bi) || !(multiply(bi, a.unit(), a) == bi))
            fail(r, "unit law fails on " + a.label(i));
        for (BasisIndex j = 0; j < n && r.passed; ++j) {
            const AlgebraElement& ij = a.product(i, j);
            for (BasisIndex k = 0; k < n; ++k) {
                const AlgebraElement left = multiply(ij, a.basis(k), a);
                const AlgebraElement right = multiply(bi, a.product(j, k), a);
                if (!(left == right)) {
                    fail(r, "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) + " != " + a.label(i) + "*(" +
                                a.label(j) + "*" + a.label(k) + ")");
                    break;
                }
            }
        }
    }
    return r;
}

CheckResult check_coassociativity(const HopfAlgebra& h) {
    const FiniteAlgebra& a = h.algebra;
    CheckResult r{"coassociativity", true, {}};
    for (BasisIndex i = 0; i < a.dim(); ++i) {
        TensorElement right(3);
        for (const auto& [k, c] : h.coproduct[i].terms())
            for (const auto& [k2, c2] : h.coproduct[k[1]].terms()) right.add_term({k[0], k2[0], k2[1]}, c * c2);
        if (!(h.double_coproduct(i) == right)) {
            fail(r, "(Delta x id)Delta != (id x Delta)Delta on " + a.label(i));
            break;
        }
    }
    return r;
}

CheckResult check_counit(const HopfAlgebra& h) {
    const FiniteAlgebra& a = h.algebra;
    CheckResult r{"counit", true, {}};
    for (BasisIndex i = 0; i < a.dim(); ++i) {
        AlgebraElement left(a.space()), right(a.space());
        for (const auto& [k, c] : h.coproduct[i].terms()) {
            left.add_term(k[1], c * h.counit[k[0]]);
            right.add_term(k[0], c * h.counit[k[1]]);
        }
        const AlgebraElement bi = a.basis(i);
        if (!(left == bi) || !(right == bi)) {
            fail(r, "(epsilon x id)Delta or (id x epsilon)Delta differs from id on " + a.label(i));
            break;
        }
    }
    return r;
}

CheckResult check_bialgebra(const HopfAlgebra& h) {
    const FiniteAlgebra& a = h.algebra;
    CheckResult r{"bialgebra", true, {}};
    const AlgebraElement units[2] = {a.unit(), a.unit()};
    if (!(h.apply_coproduct(a.unit()) == pure_tensor(units))) fail(r, "Delta(1) != 1 (x) 1");
    if (!(h.apply_counit(a.unit()) == Scalar(1))) fail(r, "epsilon(1) != 1");
    for (BasisIndex i = 0; i < a.dim() && r.passed; ++i)
        for (BasisIndex j = 0; j < a.dim(); ++j) {
            const AlgebraElement& ij = a.product(i, j);
            if (!(h.apply_counit(ij) == h.counit[i] * h.counit[j])) {
                fail(r, "epsilon(" + a.label(i) + "*" + a.label(j) + ") != epsilon(" + a.label(i) + ")epsilon(" +
                            a.label(j) + ")");
                break;
            }
            if (!(h.apply_coproduct(ij) == tensor_multiply(h.coproduct[i], h.coproduct[j], a))) {
                fail(r, "Delta(" + a.label(i) + "*" + a.label(j) + ") != Delta(" + a.label(i) + ")Delta(" +
                            a.label(j) + ")");
                break;
            }
        }
    return r;
}

CheckResult check_antipode(const HopfAlgebra& h) {
    const FiniteAlgebra& a = h.algebra;
    CheckResult r{"antipode", true, {}};
    for (BasisIndex i = 0; i < a.dim(); ++i) {
        AlgebraElement left(a.space()), right(a.space());
        for (const auto& [k, c] : h.coproduct[i].terms()) {
            left += multiply(h.antipode[k[0]], a.basis(k[1]), a) * c;
            right += multiply(a.basis(k[0]), h.antipode[k[1]], a) * c;
        }
        const AlgebraElement expected = a.unit() * h.counit[i];
        if (!(left == expected) || !(right == expected)) {
            fail(r, "m(S x id)Delta or m(id x S)Delta differs from epsilon*1 on " + a.label(i));
            break;
        }
    }
    return r;
}

}  // namespace

HopfReport check_hopf_axioms(const HopfAlgebra& h) {
    HopfReport report;
    report.checks.push_back(check_algebra_laws(h));
    report.checks.push_back(check_coassociativity(h));
    report.checks.push_back(check_counit(h));
    report.checks.push_back(check_bialgebra(h));
    report.checks.push_back(check_antipode(h));
    return report;
}

Degree operator+(const Degree& a, const Degree& b) {
    if (a.size() != b.size()) throw InvalidParameter("degree rank mismatch");
    Degree out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

std::string degree_str(const Degree& d) {
    if (d.size() == 1) return std::to_string(d[0]);
    std::string out = "(";
    for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + std::to_string(d[k]);
    return out + ")";
}

Grading::Grading(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    rank_ = degrees_.empty() ? 1 : degrees_.front().size();
    if (rank_ == 0) throw InvalidParameter("grading rank must be positive");
    for (const auto& d : degrees_)
        if (d.size() != rank_) throw InvalidParameter("all degrees of a grading must have the same rank");
}

Grading Grading::integer(const std::vector<int>& degrees) {
    std::vector<Degree> ds;
    ds.reserve(degrees.size());
    for (int d : degrees) ds.push_back({d});
    return Grading(std::move(ds));
}

int Grading::integer_degree(BasisIndex i) const {
    if (rank_ != 1) throw InvalidParameter("integer_degree on a grading of rank " + std::to_string(rank_));
    return degrees_.at(i)[0];
}

bool Grading::nontrivial() const {
    for (const auto& d : degrees_)
        for (int x : d)
            if (x != 0) return true;
    return false;
}

GradingReport check_grading(const FiniteAlgebra& a, const Grading& d) {
    if (d.size() != a.dim()) throw InvalidParameter("grading must assign a degree to every basis element");
    GradingReport report;
    report.nontrivial = d.nontrivial();
    for (BasisIndex i = 0; i < a.dim(); ++i)
        for (BasisIndex j = 0; j < a.dim(); ++j) {
            const Degree target = d.degree(i) + d.degree(j);
            for (const auto& [k, c] : a.product(i, j).terms())
                if (d.degree(k) != target) {
                    report.passed = false;
                    report.violations.push_back(a.label(i) + "*" + a.label(j) + " has a term " + a.label(k) +
                                                " of degree " + degree_str(d.degree(k)) + ", expected " +
                                                degree_str(target));
                    break;
                }
        }
    return report;
}

GradingReport check_coproduct_grading(const HopfAlgebra& h, const Grading& d) {
    const FiniteAlgebra& a = h.algebra;
    if (d.size() != a.dim()) throw InvalidParameter("grading must assign a degree to every basis element");
    GradingReport report;
    report.nontrivial = d.nontrivial();
    for (BasisIndex i = 0; i < a.dim(); ++i)
        for (const auto& [k, c] : h.coproduct[i].terms())
            if (d.degree(k[0]) + d.degree(k[1]) != d.degree(i)) {
                report.passed = false;
                report.violations.push_back("Delta(" + a.label(i) + ") has a term " + a.label(k[0]) + " (x) " +
                                            a.label(k[1]) + " of total degree " +
                                            degree_str(d.degree(k[0]) + d.degree(k[1])) + ", expected " +
                                            degree_str(d.degree(i)));
                break;
            }
    return report;
}

HopfAlgebra dual(const HopfAlgebra& h) {
    const FiniteAlgebra& a = h.algebra;
    const std::size_t n = a.dim();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& l : a.labels()) labels.push_back("(" + l + ")*");

    std::vector<AlgebraElement> table(n * n);
    for (BasisIndex k = 0; k < n; ++k)
        for (const auto& [key, c] : h.coproduct[k].terms()) table[key[0] * n + key[1]].add_term(k, c);

    AlgebraElement unit;
    for (BasisIndex i = 0; i < n; ++i) unit.add_term(i, h.counit[i]);

    FiniteAlgebra algebra(a.name() + "*", std::move(labels), a.field(), std::move(table), std::move(unit));

    std::vector<TensorElement> coproduct(n, TensorElement(2));
    for (BasisIndex j = 0; j < n; ++j)
        for (BasisIndex k = 0; k < n; ++k)
            for (const auto& [i, c] : a.product(j, k).terms()) coproduct[i].add_term({j, k}, c);

    std::vector<Scalar> counit(n);
    for (BasisIndex i = 0; i < n; ++i) counit[i] = a.unit().coefficient(i);

    std::vector<AlgebraElement> antipode(n, AlgebraElement(algebra.space()));
    for (BasisIndex j = 0; j < n; ++j)
        for (const auto& [i, c] : h.antipode[j].terms()) antipode[i].add_term(j, c);

    return HopfAlgebra{std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode)};
}

Grading dual_grading(const HopfAlgebra& h, const Grading& d) {
    const GradingReport mult = check_grading(h.algebra, d);
    const GradingReport co = check_coproduct_grading(h, d);
    if (!mult.passed || !co.passed)
        throw PreconditionViolation("dual_grading: the grading is not compatible with both m and Delta");
    return d;
}

}  // namespace bax
