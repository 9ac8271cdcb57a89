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

#include "bax/dense_matrix.hpp"

#include <utility>

#include "bax/errors.hpp"

namespace bax {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

DenseMatrix DenseMatrix::elementary(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) throw InvalidParameter("elementary matrix index out of range");
    DenseMatrix m(n, n);
    m(i - 1, j - 1) = Scalar(1);
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Scalar>& entries) {
    DenseMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool DenseMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t DenseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += x.is_zero() ? 0 : 1;
    return n;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidParameter("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidParameter("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Scalar& c) {
    for (auto& x : data_)
        if (!x.is_zero()) x *= c;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidParameter("matrix product shape mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        if (!(a.data_[k] == b.data_[k])) return false;
    return true;
}

DenseMatrix DenseMatrix::pow(unsigned exponent) const {
    if (rows_ != cols_) throw InvalidParameter("pow of a non-square matrix");
    DenseMatrix out = identity(rows_);
    for (unsigned k = 0; k < exponent; ++k) out = out * *this;
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

std::optional<DenseMatrix> DenseMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidParameter("inverse of a non-square matrix");
    const std::size_t n = rows_;
    DenseMatrix a = *this;
    DenseMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Scalar p = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) *= p;
            if (!inv(col, j).is_zero()) inv(col, j) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Scalar f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::string DenseMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace bax
