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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bax/dense_matrix.hpp"
#include "bax/param_scalar.hpp"

namespace bax {

/// Sparse matrix over ParamScalar, 0-based, stored row by row.
class ParamMatrix {
public:
    using Row = std::map<std::size_t, ParamScalar>;

    ParamMatrix() = default;
    ParamMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    explicit ParamMatrix(const DenseMatrix& m);

    static ParamMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const Row& row(std::size_t r) const { return rows_.at(r); }

    ParamScalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const ParamScalar& v);
    void add(std::size_t r, std::size_t c, const ParamScalar& v);

    bool is_zero() const;
    std::size_t nonzeros() const;
    /// True iff some entry depends on mu or nu.
    bool has_parameters() const;
    /// True iff some entry depends on nu.
    bool has_nu() const;

    ParamMatrix& operator+=(const ParamMatrix& rhs);
    ParamMatrix& operator-=(const ParamMatrix& rhs);
    ParamMatrix& operator*=(const ParamScalar& c);
    friend ParamMatrix operator+(ParamMatrix a, const ParamMatrix& b) { return a += b; }
    friend ParamMatrix operator-(ParamMatrix a, const ParamMatrix& b) { return a -= b; }
    friend ParamMatrix operator*(ParamMatrix a, const ParamScalar& c) { return a *= c; }
    friend ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b);
    friend bool operator==(const ParamMatrix& a, const ParamMatrix& b);

    ParamMatrix substitute(const ParamSubstitution& sub) const;
    ParamMatrix at_one() const;
    /// Throws DomainError if an entry depends on a parameter.
    DenseMatrix to_dense() const;

    template <class F>
    ParamMatrix map_entries(F&& f) const {
        ParamMatrix out(rows(), cols());
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& [c, v] : rows_[r]) out.set(r, c, f(v));
        return out;
    }

    /// One line per nonzero entry, "(r,c) value", 1-based.
    std::string str() const;

private:
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

ParamMatrix kron(const ParamMatrix& a, const ParamMatrix& b);

/// d with rows() = cols() = d * d; throws DimensionNotSquare otherwise.
std::size_t tensor_factor_dim(const ParamMatrix& r);

/// Place R acting on V (x) V into slots (p, q) of V^(x)3, 1-based, p < q.
ParamMatrix embed_slots(const ParamMatrix& r, std::size_t d, int p, int q);

/// Flip on V (x) V.
ParamMatrix flip(std::size_t d);

/// Divide every entry by the (1,1) entry, which must be a nonzero constant.
ParamMatrix normalize_first_entry(const ParamMatrix& m);

}  // namespace bax
