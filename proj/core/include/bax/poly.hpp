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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bax {

using Rational = mpq_class;

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// order. The coefficient vector never has a trailing zero, so the zero
/// polynomial is the empty vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(Rational c, std::size_t exponent);
    static Poly variable() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monomial() const noexcept;
    bool is_one() const noexcept;

    /// Degree of a nonzero polynomial; 0 for the zero polynomial.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const noexcept;

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    /// Multiply by t^k.
    Poly shifted_up(std::size_t k) const;
    /// Divide by t^k; the low k coefficients must be zero.
    Poly shifted_down(std::size_t k) const;

    Poly monic() const;

    /// Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// Value at a rational point (Horner).
    Rational evaluate(const Rational& t) const;

    /// Expanded text with ascending exponents, e.g. "1 - 2*q + 1/3*q^4".
    std::string str(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Returns (g, u) with g = gcd(a, m) monic and u·a ≡ g (mod m).
std::pair<Poly, Poly> gcd_with_cofactor(const Poly& a, const Poly& m);

/// The n-th cyclotomic polynomial, cached.
const Poly& cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

}  // namespace bax
