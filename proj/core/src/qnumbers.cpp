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

#include "bax/qnumbers.hpp"

#include <string>

#include "bax/errors.hpp"

namespace bax {

Scalar q_bracket(int n, const Scalar& q) {
    if (n < 0) throw DomainError("q_bracket: n must be nonnegative");
    Scalar sum;
    Scalar power(1);
    for (int k = 0; k < n; ++k) {
        sum += power;
        power *= q;
    }
    return sum;
}

Scalar q_bracket_factorial(int n, const Scalar& q) {
    if (n < 0) throw DomainError("q_bracket_factorial: n must be nonnegative");
    Scalar out(1);
    for (int k = 2; k <= n; ++k) out *= q_bracket(k, q);
    return out;
}

Scalar gauss_binomial(int n, int m, const Scalar& q) {
    if (m < 0 || m > n) throw DomainError("gauss_binomial: need 0 <= m <= n");
    // (n)!/(m)!(n-m)! = prod_{k=1}^{m} (n-m+k)_q / (k)_q
    Scalar num(1), den(1);
    for (int k = 1; k <= m; ++k) {
        num *= q_bracket(n - m + k, q);
        const Scalar factor = q_bracket(k, q);
        if (factor.is_zero())
            throw DomainError("gauss_binomial: (" + std::to_string(k) + ")_q vanishes at q = " + q.str());
        den *= factor;
    }
    Scalar out = num / den;
    if (!(out * den == num)) throw DomainError("gauss_binomial: inexact quotient");
    return out;
}

Scalar q_number(int n, const Scalar& q, bool polynomial_fallback) {
    const Scalar q_inv = q.inverse();
    const Scalar gap = q - q_inv;
    if (!gap.is_zero()) return (q.pow(n) - q_inv.pow(n)) / gap;
    if (!polynomial_fallback) throw DomainError("q_number: q - q^-1 is not invertible at q = " + q.str());
    const int sign = n < 0 ? -1 : 1;
    const int m = n < 0 ? -n : n;
    Scalar sum;
    for (int k = 0; k < m; ++k) sum += q.pow(m - 1 - 2 * k);
    return sign < 0 ? -sum : sum;
}

Scalar q_number_factorial(int n, const Scalar& q, bool polynomial_fallback) {
    if (n < 0) throw DomainError("q_number_factorial: n must be nonnegative");
    Scalar out(1);
    for (int k = 2; k <= n; ++k) out *= q_number(k, q, polynomial_fallback);
    return out;
}

}  // namespace bax
