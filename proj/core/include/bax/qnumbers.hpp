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

#include "bax/scalar.hpp"

namespace bax {

/// (n)_q = 1 + q + ... + q^(n-1); zero for n = 0.
Scalar q_bracket(int n, const Scalar& q);

/// (n)_q! = (n)_q (n-1)_q ... (1)_q; one for n = 0.
Scalar q_bracket_factorial(int n, const Scalar& q);

/// (n)_q! / ((m)_q! (n-m)_q!). Throws DomainError if a denominator factor vanishes,
/// e.g. (N)_q at a primitive N-th root of unity.
Scalar gauss_binomial(int n, int m, const Scalar& q);

/// Balanced q-integer [n]_q = (q^n - q^-n)/(q - q^-1).
///
/// When q - q^-1 is not invertible (q = +-1) the polynomial form
/// q^(n-1) + q^(n-3) + ... + q^(1-n) is used, unless `polynomial_fallback`
/// is false, in which case DomainError is thrown.
Scalar q_number(int n, const Scalar& q, bool polynomial_fallback = true);

/// [n]_q [n-1]_q ... [1]_q.
Scalar q_number_factorial(int n, const Scalar& q, bool polynomial_fallback = true);

}  // namespace bax
