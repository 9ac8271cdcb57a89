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

#include "bax/algebra.hpp"

#include <atomic>

namespace bax {

namespace {

std::uint64_t next_space_tag() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

std::string coefficient_prefix(const std::string& c) {
    if (c == "1") return "";
    if (c == "-1") return "-";
    const bool compound = c.find_first_of(" /") != std::string::npos;
    return compound ? "(" + c + ")*" : c + "*";
}

}  // namespace

AlgebraElement::AlgebraElement(Terms terms, std::uint64_t space) : space_(space) {
    for (auto& [i, c] : terms)
        if (!c.is_zero()) terms_.emplace(i, std::move(c));
}

AlgebraElement AlgebraElement::basis(BasisIndex i, std::uint64_t space) {
    AlgebraElement x(space);
    x.terms_.emplace(i, Scalar(1));
    return x;
}

Scalar AlgebraElement::coefficient(BasisIndex i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::add_term(BasisIndex i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::uint64_t AlgebraElement::merge_space(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b != 0 && a != b) throw AlgebraMismatch("elements belong to different algebras");
    return a != 0 ? a : b;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    space_ = merge_space(space_, rhs.space_);
    for (const auto& [i, c] : rhs.terms_) add_term(i, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    space_ = merge_space(space_, rhs.space_);
    for (const auto& [i, c] : rhs.terms_) add_term(i, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, a] : terms_) a *= c;
    return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels, Field field,
                             std::vector<AlgebraElement> table, AlgebraElement unit)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      field_(field),
      table_(std::move(table)),
      unit_(std::move(unit)),
      space_(next_space_tag()) {
    if (table_.size() != labels_.size() * labels_.size())
        throw InvalidParameter("structure table of " + name_ + " must have dim^2 entries");
    unit_ = AlgebraElement(unit_.terms(), space_);
    for (auto& entry : table_) entry = AlgebraElement(entry.terms(), space_);
}

AlgebraElement FiniteAlgebra::basis(BasisIndex i) const {
    if (i >= dim()) throw AlgebraMismatch("basis index out of range for " + name_);
    return AlgebraElement::basis(i, space_);
}

void FiniteAlgebra::check_member(const AlgebraElement& x) const {
    if (x.space() != 0 && x.space() != space_)
        throw AlgebraMismatch("element does not belong to " + name_);
    if (!x.terms().empty() && x.terms().rbegin()->first >= dim())
        throw AlgebraMismatch("basis index out of range for " + name_);
}

std::string FiniteAlgebra::format(const AlgebraElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += coefficient_prefix(c.str()) + label(i);
    }
    return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const FiniteAlgebra& algebra) {
    algebra.check_member(x);
    algebra.check_member(y);
    AlgebraElement out(algebra.space());
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms()) {
            const Scalar ab = a * b;
            for (const auto& [k, c] : algebra.product(i, j).terms()) out.add_term(k, ab * c);
        }
    return out;
}

TensorKey::TensorKey(std::initializer_list<BasisIndex> indices) {
    set_arity(indices.size());
    std::size_t k = 0;
    for (BasisIndex i : indices) index_[k++] = i;
}

void TensorKey::set_arity(std::size_t n) {
    if (n > max_arity) throw ArityMismatch("tensor arity exceeds " + std::to_string(max_arity));
    arity_ = static_cast<std::uint8_t>(n);
}

ParamTensor promote(const TensorElement& t) {
    ParamTensor out(t.arity());
    for (const auto& [k, c] : t.terms()) out.add_term(k, ParamScalar(c));
    return out;
}

namespace {

// Calls f(key, coeff) for every basis tuple of factors[0] (x) ... (x) factors[n-1].
template <class F>
void expand_product(std::span<const AlgebraElement* const> factors, F&& f) {
    const std::size_t n = factors.size();
    std::array<AlgebraElement::Terms::const_iterator, TensorKey::max_arity> it;
    for (std::size_t s = 0; s < n; ++s) {
        if (factors[s]->is_zero()) return;
        it[s] = factors[s]->terms().begin();
    }
    TensorKey key;
    key.set_arity(n);
    for (;;) {
        Scalar coeff(1);
        for (std::size_t s = 0; s < n; ++s) {
            key[s] = it[s]->first;
            if (!it[s]->second.is_one()) coeff *= it[s]->second;
        }
        f(key, coeff);
        std::size_t s = n;
        while (s-- > 0) {
            if (++it[s] != factors[s]->terms().end()) break;
            it[s] = factors[s]->terms().begin();
        }
        if (s == static_cast<std::size_t>(-1)) return;
    }
}

}  // namespace

TensorElement pure_tensor(std::span<const AlgebraElement> factors) {
    TensorElement out(factors.size());
    std::vector<const AlgebraElement*> ptrs;
    for (const auto& x : factors) ptrs.push_back(&x);
    expand_product(std::span<const AlgebraElement* const>(ptrs),
                   [&](const TensorKey& k, const Scalar& c) { out.add_term(k, c); });
    return out;
}

template <class C>
Tensor<C> tensor_multiply(const Tensor<C>& u, const Tensor<C>& v, std::span<const FiniteAlgebra* const> slots) {
    if (u.arity() != v.arity()) throw ArityMismatch("tensor_multiply: arity mismatch");
    if (slots.size() != u.arity()) throw ArityMismatch("tensor_multiply: one algebra per slot required");
    const std::size_t n = u.arity();
    Tensor<C> out(n);
    std::array<const AlgebraElement*, TensorKey::max_arity> factors{};
    for (const auto& [ku, cu] : u.terms()) {
        for (std::size_t s = 0; s < n; ++s)
            if (ku[s] >= slots[s]->dim()) throw AlgebraMismatch("tensor_multiply: index out of range in slot");
        for (const auto& [kv, cv] : v.terms()) {
            bool zero = false;
            for (std::size_t s = 0; s < n && !zero; ++s) {
                if (kv[s] >= slots[s]->dim()) throw AlgebraMismatch("tensor_multiply: index out of range in slot");
                factors[s] = &slots[s]->product(ku[s], kv[s]);
                zero = factors[s]->is_zero();
            }
            if (zero) continue;
            const C uv = cu * cv;
            expand_product(std::span<const AlgebraElement* const>(factors.data(), n),
                           [&](const TensorKey& k, const Scalar& c) {
                               if (c.is_one())
                                   out.add_term(k, uv);
                               else
                                   out.add_term(k, uv * c);
                           });
        }
    }
    return out;
}

template <class C>
Tensor<C> embed(const Tensor<C>& r, int p, int q, std::span<const FiniteAlgebra* const> slots) {
    const int arity = static_cast<int>(slots.size());
    if (r.arity() != 2) throw ArityMismatch("embed: expected an arity-2 tensor");
    if (!(1 <= p && p < q && q <= arity))
        throw InvalidSlots("embed: invalid slot pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
    Tensor<C> out(static_cast<std::size_t>(arity));
    std::array<AlgebraElement, TensorKey::max_arity> factors;
    std::array<const AlgebraElement*, TensorKey::max_arity> ptrs{};
    for (int s = 0; s < arity; ++s) {
        factors[static_cast<std::size_t>(s)] = slots[static_cast<std::size_t>(s)]->unit();
        ptrs[static_cast<std::size_t>(s)] = &factors[static_cast<std::size_t>(s)];
    }
    for (const auto& [k, c] : r.terms()) {
        factors[static_cast<std::size_t>(p - 1)] = AlgebraElement::basis(k[0]);
        factors[static_cast<std::size_t>(q - 1)] = AlgebraElement::basis(k[1]);
        expand_product(std::span<const AlgebraElement* const>(ptrs.data(), static_cast<std::size_t>(arity)),
                       [&](const TensorKey& key, const Scalar& u) {
                           if (u.is_one())
                               out.add_term(key, c);
                           else
                               out.add_term(key, c * u);
                       });
    }
    return out;
}

template <class C>
std::string format_tensor(const Tensor<C>& t, std::span<const FiniteAlgebra* const> slots) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : t.terms()) {
        if (!out.empty()) out += " + ";
        out += coefficient_prefix(c.str());
        for (std::size_t s = 0; s < t.arity(); ++s) {
            if (s > 0) out += " (x) ";
            out += slots[s]->label(k[s]);
        }
    }
    return out;
}

template Tensor<Scalar> tensor_multiply(const Tensor<Scalar>&, const Tensor<Scalar>&,
                                        std::span<const FiniteAlgebra* const>);
template Tensor<ParamScalar> tensor_multiply(const Tensor<ParamScalar>&, const Tensor<ParamScalar>&,
                                             std::span<const FiniteAlgebra* const>);
template Tensor<Scalar> embed(const Tensor<Scalar>&, int, int, std::span<const FiniteAlgebra* const>);
template Tensor<ParamScalar> embed(const Tensor<ParamScalar>&, int, int, std::span<const FiniteAlgebra* const>);
template std::string format_tensor(const Tensor<Scalar>&, std::span<const FiniteAlgebra* const>);
template std::string format_tensor(const Tensor<ParamScalar>&, std::span<const FiniteAlgebra* const>);

}  // namespace bax
