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

#include "bax/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "bax/errors.hpp"

namespace bax {

Poly::Poly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, std::size_t exponent) {
    Poly p;
    if (c == 0) return p;
    p.coeffs_.assign(exponent + 1, Rational(0));
    p.coeffs_.back() = std::move(c);
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Poly::is_monomial() const noexcept {
    if (coeffs_.empty()) return false;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool Poly::is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t Poly::valuation() const noexcept {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return 0;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.trim();
    return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly out;
    out.coeffs_.assign(k, Rational(0));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

Poly Poly::shifted_down(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    if (valuation() < k) throw DomainError("Poly::shifted_down: not divisible by t^k");
    Poly out;
    out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly out = *this;
    const Rational lead = leading();
    if (lead != 1)
        for (auto& a : out.coeffs_) a /= lead;
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree() || a.is_zero()) return {Poly(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(a.degree() - b.degree() + 1, Rational(0));
    const std::size_t db = b.degree();
    const Rational& lb = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational& top = rem[k + db];
        if (top == 0) continue;
        Rational factor = top / lb;
        for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= factor * b.coeffs_[i];
        quo[k] = std::move(factor);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Rational Poly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<Poly, Poly> gcd_with_cofactor(const Poly& a, const Poly& m) {
    // Invariant: r0 ≡ s0·a, r1 ≡ s1·a (mod m).
    Poly r0 = m, r1 = Poly::divmod(a, m).second;
    Poly s0, s1(Rational(1));
    while (!r1.is_zero()) {
        auto [quo, rem] = Poly::divmod(r0, r1);
        Poly s2 = s0 - quo * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_zero()) return {Poly(), Poly()};
    const Rational lead = r0.leading();
    Rational inv = 1 / lead;
    return {r0 * inv, Poly::divmod(s0 * inv, m).second};
}

const Poly& cyclotomic_polynomial(int n) {
    if (n < 1) throw DomainError("cyclotomic_polynomial: order must be positive");
    static std::mutex mutex;
    static std::map<int, Poly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // t^n - 1 = prod_{d | n} Phi_d(t); std::map references stay valid across inserts.
    Poly p = Poly::monomial(Rational(1), static_cast<std::size_t>(n)) - Poly(Rational(1));
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto it = cache.find(d);
        Poly phi_d;
        if (it == cache.end()) {
            // Recursive fill without re-locking.
            Poly t = Poly::monomial(Rational(1), static_cast<std::size_t>(d)) - Poly(Rational(1));
            for (int e = 1; e < d; ++e)
                if (d % e == 0) t = Poly::divmod(t, cache.at(e)).first;
            it = cache.emplace(d, std::move(t)).first;
        }
        p = Poly::divmod(p, it->second).first;
    }
    return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace bax
