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

#include <random>
#include <vector>

#include "bax/algebra.hpp"
#include "bax/matrix.hpp"
#include "bax/param_scalar.hpp"
#include "bax/scalar.hpp"

namespace bax::testing {

/// Deterministic source of random exact values for property tests.
class Gen {
public:
    explicit Gen(unsigned seed = 20261016u) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational() {
        const int den = integer(1, 6);
        Rational r(integer(-9, 9), den);
        r.canonicalize();
        return r;
    }

    Poly poly(int max_degree) {
        std::vector<Rational> c(integer(0, max_degree) + 1);
        for (auto& x : c) x = rational();
        return Poly(c);
    }

    /// Random element of the field; in Q(s) numerator and denominator are random
    /// polynomials, the denominator nonzero.
    Scalar scalar(const Field& f) {
        switch (f.kind) {
            case FieldKind::rational: return Scalar(rational());
            case FieldKind::cyclotomic: return Scalar(f, poly(euler_phi(f.order)));
            case FieldKind::rational_function: {
                Poly den = poly(2);
                while (den.is_zero()) den = poly(2);
                return Scalar(f, poly(3), den);
            }
        }
        return Scalar();
    }

    Scalar nonzero_scalar(const Field& f) {
        Scalar x = scalar(f);
        while (x.is_zero()) x = scalar(f);
        return x;
    }

    ParamScalar param_scalar(const Field& f, int terms = 3) {
        ParamScalar out;
        const int n = integer(0, terms);
        for (int k = 0; k < n; ++k) out.add_term({integer(-2, 3), integer(-2, 3)}, scalar(f));
        return out;
    }

    /// Laurent polynomial in mu only.
    ParamScalar mu_polynomial(const Field& f, int terms = 3) {
        ParamScalar out;
        const int n = integer(0, terms);
        for (int k = 0; k < n; ++k) out.add_term({integer(-2, 3), 0}, scalar(f));
        return out;
    }

    AlgebraElement element(std::size_t dim, const Field& f, std::uint64_t space = 0) {
        AlgebraElement x(space);
        const int n = integer(0, 3);
        for (int k = 0; k < n; ++k) x.add_term(static_cast<BasisIndex>(integer(0, static_cast<int>(dim) - 1)), scalar(f));
        return x;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace bax::testing
