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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bax/errors.hpp"
#include "bax/param_scalar.hpp"
#include "bax/scalar.hpp"

namespace bax {

using BasisIndex = std::uint32_t;

/// Sparse linear combination of basis elements of one finite-dimensional
/// algebra. `space` identifies the owning algebra (0 = untagged, accepted by
/// every algebra of sufficient dimension).
class AlgebraElement {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(std::uint64_t space) : space_(space) {}
    AlgebraElement(Terms terms, std::uint64_t space = 0);

    static AlgebraElement basis(BasisIndex i, std::uint64_t space = 0);

    const Terms& terms() const noexcept { return terms_; }
    std::uint64_t space() const noexcept { return space_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Scalar coefficient(BasisIndex i) const;

    void add_term(BasisIndex i, const Scalar& c);

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Scalar& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

    /// Equal coefficients; the space tag is ignored.
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    static std::uint64_t merge_space(std::uint64_t a, std::uint64_t b);
    Terms terms_;
    std::uint64_t space_ = 0;
};

/// Finite-dimensional associative algebra given by a dense table of structure
/// constants: product(i, j) is the expansion of b_i * b_j.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(std::string name, std::vector<std::string> labels, Field field,
                  std::vector<AlgebraElement> table, AlgebraElement unit);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::string& label(BasisIndex i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Field& field() const noexcept { return field_; }
    std::uint64_t space() const noexcept { return space_; }
    const AlgebraElement& unit() const noexcept { return unit_; }

    AlgebraElement basis(BasisIndex i) const;
    const AlgebraElement& product(BasisIndex i, BasisIndex j) const { return table_[i * dim() + j]; }
    /// Throws AlgebraMismatch if x belongs to a different algebra or uses an index out of range.
    void check_member(const AlgebraElement& x) const;

    /// Human-readable expansion, e.g. "2*a^1x^0 + (1 + q)*a^0x^1".
    std::string format(const AlgebraElement& x) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    Field field_;
    std::vector<AlgebraElement> table_;
    AlgebraElement unit_;
    std::uint64_t space_ = 0;
};

/// Bilinear extension of the basis product table.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const FiniteAlgebra& algebra);

/// Basis index tuple of a pure tensor; arity at most TensorKey::max_arity.
struct TensorKey {
    static constexpr std::size_t max_arity = 4;

    TensorKey() = default;
    TensorKey(std::initializer_list<BasisIndex> indices);

    std::size_t arity() const noexcept { return arity_; }
    BasisIndex operator[](std::size_t slot) const { return index_[slot]; }
    BasisIndex& operator[](std::size_t slot) { return index_[slot]; }
    void set_arity(std::size_t n);

    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;

private:
    std::array<BasisIndex, max_arity> index_{};
    std::uint8_t arity_ = 0;
};

/// Sparse element of a k-fold tensor product. C is Scalar for constant
/// tensors and ParamScalar for the spectral-parameter variant.
template <class C>
class Tensor {
public:
    using Terms = std::map<TensorKey, C>;

    Tensor() = default;
    explicit Tensor(std::size_t arity) : arity_(arity) {
        if (arity < 2 || arity > TensorKey::max_arity)
            throw ArityMismatch("tensor arity must lie in [2, " + std::to_string(TensorKey::max_arity) + "]");
    }

    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coefficient(const TensorKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(const TensorKey& key, const C& c) {
        if (key.arity() != arity_) throw ArityMismatch("tensor key arity does not match tensor arity");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Tensor& operator+=(const Tensor& rhs) {
        require_same_arity(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& rhs) {
        require_same_arity(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    Tensor& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
        auto ib = b.terms_.begin();
        for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        return true;
    }

private:
    void require_same_arity(const Tensor& rhs) const {
        if (rhs.arity_ != arity_) throw ArityMismatch("tensor arity mismatch");
    }
    std::size_t arity_ = 2;
    Terms terms_;
};

using TensorElement = Tensor<Scalar>;
using ParamTensor = Tensor<ParamScalar>;

/// Scalar coefficients become parameter-free ParamScalars.
ParamTensor promote(const TensorElement& t);

/// x_1 (x) x_2 (x) ... expanded into basis tuples.
TensorElement pure_tensor(std::span<const AlgebraElement> factors);

/// Slot-wise product (u * v)_k = u_k * v_k, bilinearly expanded. `slots[k]`
/// is the algebra of slot k.
template <class C>
Tensor<C> tensor_multiply(const Tensor<C>& u, const Tensor<C>& v, std::span<const FiniteAlgebra* const> slots);

template <class C>
Tensor<C> tensor_multiply(const Tensor<C>& u, const Tensor<C>& v, const FiniteAlgebra& algebra) {
    std::vector<const FiniteAlgebra*> slots(u.arity(), &algebra);
    return tensor_multiply(u, v, std::span<const FiniteAlgebra* const>(slots));
}

/// Place an arity-2 tensor into slots (p, q) (1-based, p < q) of an `arity`-fold
/// tensor product, with the unit of slots[k] in every other slot k.
template <class C>
Tensor<C> embed(const Tensor<C>& r, int p, int q, std::span<const FiniteAlgebra* const> slots);

template <class C>
Tensor<C> embed(const Tensor<C>& r, int p, int q, std::size_t arity, const FiniteAlgebra& algebra) {
    std::vector<const FiniteAlgebra*> slots(arity, &algebra);
    return embed(r, p, q, std::span<const FiniteAlgebra* const>(slots));
}

/// Human-readable tensor, e.g. "a^0x^0 (x) (a^0x^0)* + ...".
template <class C>
std::string format_tensor(const Tensor<C>& t, std::span<const FiniteAlgebra* const> slots);

extern template Tensor<Scalar> tensor_multiply(const Tensor<Scalar>&, const Tensor<Scalar>&,
                                               std::span<const FiniteAlgebra* const>);
extern template Tensor<ParamScalar> tensor_multiply(const Tensor<ParamScalar>&, const Tensor<ParamScalar>&,
                                                    std::span<const FiniteAlgebra* const>);
extern template Tensor<Scalar> embed(const Tensor<Scalar>&, int, int, std::span<const FiniteAlgebra* const>);
extern template Tensor<ParamScalar> embed(const Tensor<ParamScalar>&, int, int,
                                          std::span<const FiniteAlgebra* const>);
extern template std::string format_tensor(const Tensor<Scalar>&, std::span<const FiniteAlgebra* const>);
extern template std::string format_tensor(const Tensor<ParamScalar>&, std::span<const FiniteAlgebra* const>);

}  // namespace bax
