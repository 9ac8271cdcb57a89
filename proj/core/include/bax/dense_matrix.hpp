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
#include <optional>
#include <string>
#include <vector>

#include "bax/scalar.hpp"

namespace bax {

/// Small dense matrix over Scalar, row-major, 0-based.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n);
    /// Elementary matrix e_{i,j} with 1-based indices.
    static DenseMatrix elementary(std::size_t n, std::size_t i, std::size_t j);
    static DenseMatrix diagonal(const std::vector<Scalar>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const;
    std::size_t nonzeros() const;

    DenseMatrix& operator+=(const DenseMatrix& rhs);
    DenseMatrix& operator-=(const DenseMatrix& rhs);
    DenseMatrix& operator*=(const Scalar& c);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, const Scalar& c) { return a *= c; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

    DenseMatrix pow(unsigned exponent) const;
    DenseMatrix transpose() const;

    /// Inverse by Gauss-Jordan elimination; nullopt when singular.
    std::optional<DenseMatrix> inverse() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace bax
