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

#include "bax/matrix.hpp"

#include <array>
#include <sstream>

#include "bax/errors.hpp"

namespace bax {

ParamMatrix::ParamMatrix(const DenseMatrix& m) : ParamMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) rows_[r].emplace(c, ParamScalar(m(r, c)));
}

ParamMatrix ParamMatrix::identity(std::size_t n) {
    ParamMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.rows_[i].emplace(i, ParamScalar(1));
    return out;
}

void ParamMatrix::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols_) throw InvalidParameter("matrix index out of range");
}

ParamScalar ParamMatrix::at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? ParamScalar() : it->second;
}

void ParamMatrix::set(std::size_t r, std::size_t c, const ParamScalar& v) {
    check_index(r, c);
    if (v.is_zero())
        rows_[r].erase(c);
    else
        rows_[r].insert_or_assign(c, v);
}

void ParamMatrix::add(std::size_t r, std::size_t c, const ParamScalar& v) {
    check_index(r, c);
    if (v.is_zero()) return;
    auto [it, inserted] = rows_[r].try_emplace(c, v);
    if (inserted) return;
    it->second += v;
    if (it->second.is_zero()) rows_[r].erase(it);
}

bool ParamMatrix::is_zero() const {
    for (const auto& row : rows_)
        if (!row.empty()) return false;
    return true;
}

std::size_t ParamMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
}

bool ParamMatrix::has_parameters() const {
    for (const auto& row : rows_)
        for (const auto& [c, v] : row)
            if (!v.is_constant()) return true;
    return false;
}

bool ParamMatrix::has_nu() const {
    for (const auto& row : rows_)
        for (const auto& [c, v] : row)
            for (const auto& [e, coeff] : v.terms())
                if (e[1] != 0) return true;
    return false;
}

ParamMatrix& ParamMatrix::operator+=(const ParamMatrix& rhs) {
    if (rhs.rows() != rows() || rhs.cols_ != cols_) throw InvalidParameter("matrix shape mismatch");
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& [c, v] : rhs.rows_[r]) add(r, c, v);
    return *this;
}

ParamMatrix& ParamMatrix::operator-=(const ParamMatrix& rhs) {
    if (rhs.rows() != rows() || rhs.cols_ != cols_) throw InvalidParameter("matrix shape mismatch");
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& [c, v] : rhs.rows_[r]) add(r, c, -v);
    return *this;
}

ParamMatrix& ParamMatrix::operator*=(const ParamScalar& s) {
    if (s.is_zero()) {
        for (auto& row : rows_) row.clear();
        return *this;
    }
    for (auto& row : rows_)
        for (auto& [c, v] : row) v *= s;
    return *this;
}

ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b) {
    if (a.cols_ != b.rows()) throw InvalidParameter("matrix shape mismatch in product");
    ParamMatrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& [k, x] : a.rows_[r])
            for (const auto& [c, y] : b.rows_[k]) out.add(r, c, x * y);
    return out;
}

bool operator==(const ParamMatrix& a, const ParamMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

ParamMatrix ParamMatrix::substitute(const ParamSubstitution& sub) const {
    return map_entries([&](const ParamScalar& v) { return v.substitute(sub); });
}

ParamMatrix ParamMatrix::at_one() const {
    return map_entries([](const ParamScalar& v) { return ParamScalar(v.at_one()); });
}

DenseMatrix ParamMatrix::to_dense() const {
    DenseMatrix out(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& [c, v] : rows_[r]) out(r, c) = v.constant_value();
    return out;
}

std::string ParamMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& [c, v] : rows_[r]) os << '(' << r + 1 << ',' << c + 1 << ") " << v.str() << '\n';
    return os.str();
}

ParamMatrix kron(const ParamMatrix& a, const ParamMatrix& b) {
    ParamMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (const auto& [ca, x] : a.row(ra))
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (const auto& [cb, y] : b.row(rb)) out.set(ra * b.rows() + rb, ca * b.cols() + cb, x * y);
    return out;
}

std::size_t tensor_factor_dim(const ParamMatrix& r) {
    if (r.rows() != r.cols()) throw DimensionNotSquare("R-matrix is not square");
    std::size_t d = 0;
    while (d * d < r.rows()) ++d;
    if (d * d != r.rows() || d == 0)
        throw DimensionNotSquare("R-matrix dimension " + std::to_string(r.rows()) + " is not d^2");
    return d;
}

ParamMatrix embed_slots(const ParamMatrix& r, std::size_t d, int p, int q) {
    if (r.rows() != d * d || r.cols() != d * d) throw DimensionNotSquare("embed_slots: R is not d^2 x d^2");
    if (!(1 <= p && p < q && q <= 3)) throw InvalidSlots("embed_slots: need 1 <= p < q <= 3");
    const int spectator = 6 - p - q;
    const std::size_t n = d * d * d;
    ParamMatrix out(n, n);
    const auto index = [&](std::size_t x, std::size_t y, std::size_t z) {
        std::array<std::size_t, 3> v{};
        v[p - 1] = x;
        v[q - 1] = y;
        v[spectator - 1] = z;
        return (v[0] * d + v[1]) * d + v[2];
    };
    for (std::size_t row = 0; row < d * d; ++row)
        for (const auto& [col, v] : r.row(row))
            for (std::size_t k = 0; k < d; ++k)
                out.set(index(row / d, row % d, k), index(col / d, col % d, k), v);
    return out;
}

ParamMatrix flip(std::size_t d) {
    ParamMatrix out(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.set(i * d + j, j * d + i, ParamScalar(1));
    return out;
}

ParamMatrix normalize_first_entry(const ParamMatrix& m) {
    const ParamScalar first = m.at(0, 0);
    if (first.is_zero() || !first.is_constant())
        throw DomainError("normalize_first_entry: (1,1) entry is not a nonzero constant");
    const Scalar inv = first.constant_value().inverse();
    return m.map_entries([&](const ParamScalar& v) { return v * inv; });
}

}  // namespace bax
