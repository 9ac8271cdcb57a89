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

#include <cstdint>
#include <ostream>
#include <string>

#include "bax/poly.hpp"

namespace bax {

enum class FieldKind : std::uint8_t { rational, cyclotomic, rational_function };

/// The coefficient field a Scalar lives in.
///
/// - rational: Q.
/// - cyclotomic(N): Q(z) with z a primitive N-th root of unity, elements
///   reduced modulo the N-th cyclotomic polynomial. The generator prints as `q`.
/// - rational_function: Q(s), where s is a formal square root of q (s^2 = q).
///   The generator prints as `s`.
///
/// Rational constants promote into every other field.
struct Field {
    FieldKind kind = FieldKind::rational;
    int order = 0;

    static Field rational() { return {FieldKind::rational, 0}; }
    static Field cyclotomic(int n);
    static Field rational_function() { return {FieldKind::rational_function, 0}; }

    /// "rational", "cyclotomic:N" or "rational-function".
    std::string name() const;
    static Field parse(const std::string& name);

    /// Name of the generator in canonical strings.
    const char* generator_name() const;

    friend bool operator==(const Field&, const Field&) = default;
};

/// Smallest field containing both; throws FieldMismatch if there is none.
Field join(const Field& a, const Field& b);

/// Exact element of a Field with a unique canonical representation:
/// numerator/denominator polynomials in the generator, coprime, denominator
/// monic. In the rational and cyclotomic fields the denominator is always 1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
    Scalar(Field field, Poly numerator, Poly denominator = Poly(Rational(1)));

    static Scalar generator(Field field);
    /// The deformation parameter: z in cyclotomic fields, s^2 in Q(s).
    static Scalar q(Field field);

    const Field& field() const noexcept { return field_; }
    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_rational() const noexcept { return num_.is_constant() && den_.is_one(); }
    /// Value of a constant; throws DomainError otherwise.
    Rational rational_value() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    /// Equality of canonical forms. A rational constant compares equal to the
    /// same constant in any field.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// Ring map sending the generator to `image` (rationals fixed). The source
    /// must be rational or generated over Q by its generator; the target field
    /// is image.field().
    Scalar substitute_generator(const Scalar& image) const;

    /// Canonical text, e.g. "1 + q^2", "s^-1 - s^3", "(1)/(1 + s^2)".
    std::string str() const;
    /// Parse a canonical (or any grammar-conforming) string in `field`.
    static Scalar parse(const std::string& text, Field field);

private:
    Scalar(Field field, Poly numerator, Poly denominator, bool canonical);
    void normalize();

    Field field_ = Field::rational();
    Poly num_;
    Poly den_ = Poly(Rational(1));
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace bax
