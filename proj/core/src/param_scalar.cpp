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

#include "bax/param_scalar.hpp"

#include "bax/errors.hpp"

namespace bax {

ParamScalar::ParamScalar(const Scalar& constant) {
    if (!constant.is_zero()) terms_.emplace(ParamExponents{0, 0}, constant);
}

ParamScalar::ParamScalar(const Scalar& coeff, ParamExponents exponents) {
    if (!coeff.is_zero()) terms_.emplace(exponents, coeff);
}

bool ParamScalar::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExponents{0, 0});
}

Scalar ParamScalar::constant_term() const { return coefficient({0, 0}); }

Scalar ParamScalar::coefficient(const ParamExponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar ParamScalar::constant_value() const {
    if (!is_constant()) throw DomainError("expected a parameter-free value, got " + str());
    return constant_term();
}

void ParamScalar::add_term(const ParamExponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return out;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

ParamScalar& ParamScalar::operator*=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

ParamScalar ParamScalar::divided_by(const ParamScalar& monomial) const {
    if (!monomial.is_monomial()) throw DomainError("division by a non-monomial parametric value " + monomial.str());
    const auto& [em, cm] = *monomial.terms_.begin();
    const Scalar inv = cm.inverse();
    ParamScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(ParamExponents{e[0] - em[0], e[1] - em[1]}, c * inv);
    return out;
}

ParamScalar ParamScalar::substitute(const ParamSubstitution& sub) const {
    ParamScalar out;
    for (const auto& [e, c] : terms_) {
        const ParamExponents image{sub[0][0] * e[0] + sub[0][1] * e[1], sub[1][0] * e[0] + sub[1][1] * e[1]};
        out.add_term(image, c);
    }
    return out;
}

Scalar ParamScalar::at_one() const {
    Scalar sum;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

namespace {

std::string monomial_str(const ParamExponents& e) {
    std::string out;
    const char* names[2] = {"mu", "nu"};
    for (int k = 0; k < 2; ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[k];
        if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

}  // namespace

std::string ParamScalar::str() const {
    if (terms_.empty()) return "0";
    if (is_constant()) return terms_.begin()->second.str();
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string mono = monomial_str(e);
        if (mono.empty()) {
            out += "(" + c.str() + ")";
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += "(" + c.str() + ")*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& x) { return os << x.str(); }

}  // namespace bax
