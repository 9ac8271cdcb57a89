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
#include <map>
#include <ostream>
#include <string>

#include "bax/scalar.hpp"

namespace bax {

/// Exponents of the spectral parameters (mu, nu). Negative entries are allowed.
using ParamExponents = std::array<int, 2>;

/// Integer 2x2 matrix acting on exponent vectors; column k is the image of the
/// k-th parameter. {{1,0},{1,0}} sends mu to mu*nu, {{0,0},{1,0}} sends mu to nu.
using ParamSubstitution = std::array<std::array<int, 2>, 2>;

/// Laurent polynomial in mu, nu with Scalar coefficients. No stored zeros.
class ParamScalar {
public:
    using Terms = std::map<ParamExponents, Scalar>;

    ParamScalar() = default;
    ParamScalar(const Scalar& constant);  // NOLINT(google-explicit-constructor)
    ParamScalar(long constant) : ParamScalar(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
    ParamScalar(const Scalar& coeff, ParamExponents exponents);

    static ParamScalar mu(int power = 1) { return ParamScalar(Scalar(1), {power, 0}); }
    static ParamScalar nu(int power = 1) { return ParamScalar(Scalar(1), {0, power}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Coefficient of mu^0 nu^0 (zero if absent).
    Scalar constant_term() const;
    /// Coefficient at the given exponents (zero if absent).
    Scalar coefficient(const ParamExponents& e) const;
    /// Value of a parameter-free element; throws DomainError otherwise.
    Scalar constant_value() const;

    ParamScalar& operator+=(const ParamScalar& rhs);
    ParamScalar& operator-=(const ParamScalar& rhs);
    ParamScalar& operator*=(const ParamScalar& rhs);
    ParamScalar& operator*=(const Scalar& rhs);

    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator*(ParamScalar a, const Scalar& b) { return a *= b; }
    ParamScalar operator-() const;

    /// Division by a monomial c*mu^a*nu^b; anything else throws DomainError.
    ParamScalar divided_by(const ParamScalar& monomial) const;

    /// Add c * mu^e[0] nu^e[1].
    void add_term(const ParamExponents& e, const Scalar& c);

    ParamScalar substitute(const ParamSubstitution& sub) const;
    /// Value at mu = nu = 1.
    Scalar at_one() const;
    /// Apply f to every coefficient.
    template <class F>
    ParamScalar map_coefficients(F&& f) const {
        ParamScalar out;
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b);

    /// Canonical text: terms in ascending (mu, nu) order, e.g. "(s^-1 - s^3)*mu".
    std::string str() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& x);

/// Parse the expression grammar (integers, q, s, mu, nu, ^, *, /, +, -,
/// parentheses) into a ParamScalar over `field`. Exponents are integers,
/// optionally negative. Division is allowed by nonzero scalars and monomials.
ParamScalar parse_param_scalar(const std::string& text, Field field);

}  // namespace bax
