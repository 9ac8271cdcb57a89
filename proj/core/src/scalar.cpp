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

#include "bax/scalar.hpp"

#include <utility>
#include <vector>

#include "bax/errors.hpp"

namespace bax {

Field Field::cyclotomic(int n) {
    if (n < 1) throw DomainError("cyclotomic field order must be positive");
    return {FieldKind::cyclotomic, n};
}

std::string Field::name() const {
    switch (kind) {
        case FieldKind::rational:
            return "rational";
        case FieldKind::cyclotomic:
            return "cyclotomic:" + std::to_string(order);
        case FieldKind::rational_function:
            return "rational-function";
    }
    return "?";
}

Field Field::parse(const std::string& name) {
    if (name == "rational") return rational();
    if (name == "rational-function") return rational_function();
    const std::string prefix = "cyclotomic:";
    if (name.rfind(prefix, 0) == 0) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(name.substr(prefix.size()), &used);
            if (used + prefix.size() == name.size()) return cyclotomic(n);
        } catch (const std::logic_error&) {
        }
    }
    throw ParseError("unknown field name '" + name + "'");
}

const char* Field::generator_name() const {
    switch (kind) {
        case FieldKind::cyclotomic:
            return "q";
        case FieldKind::rational_function:
            return "s";
        default:
            return "";
    }
}

Field join(const Field& a, const Field& b) {
    if (a.kind == FieldKind::rational) return b;
    if (b.kind == FieldKind::rational || a == b) return a;
    throw FieldMismatch("cannot combine scalars from " + a.name() + " and " + b.name());
}

Scalar::Scalar(long value) : num_(Rational(value)) {}

Scalar::Scalar(const Rational& value) : num_(value) {}

Scalar::Scalar(Field field, Poly numerator, Poly denominator)
    : field_(field), num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

Scalar::Scalar(Field field, Poly numerator, Poly denominator, bool)
    : field_(field), num_(std::move(numerator)), den_(std::move(denominator)) {}

Scalar Scalar::generator(Field field) {
    if (field.kind == FieldKind::rational) throw DomainError("the rational field has no generator");
    return Scalar(field, Poly::variable());
}

Scalar Scalar::q(Field field) {
    switch (field.kind) {
        case FieldKind::cyclotomic:
            return generator(field);
        case FieldKind::rational_function:
            return Scalar(field, Poly::monomial(Rational(1), 2));
        default:
            throw DomainError("q is undefined in the rational field");
    }
}

void Scalar::normalize() {
    if (den_.is_zero()) throw DomainError("zero denominator");
    switch (field_.kind) {
        case FieldKind::rational: {
            if (!num_.is_constant() || !den_.is_constant())
                throw DomainError("non-constant polynomial in the rational field");
            if (!den_.is_one()) {
                num_ = Poly(num_.coeff(0) / den_.coeff(0));
                den_ = Poly(Rational(1));
            }
            return;
        }
        case FieldKind::cyclotomic: {
            const Poly& phi = cyclotomic_polynomial(field_.order);
            if (!den_.is_one()) {
                auto [g, inv] = gcd_with_cofactor(den_, phi);
                if (!g.is_one()) throw DomainError("zero denominator in " + field_.name());
                num_ = num_ * inv;
                den_ = Poly(Rational(1));
            }
            if (num_.degree() >= phi.degree() && !num_.is_zero())
                num_ = Poly::divmod(num_, phi).second;
            return;
        }
        case FieldKind::rational_function: {
            if (num_.is_zero()) {
                den_ = Poly(Rational(1));
                return;
            }
            if (den_.is_monomial()) {
                const std::size_t k = std::min(num_.valuation(), den_.degree());
                const Rational lead = den_.leading();
                num_ = num_.shifted_down(k);
                den_ = Poly::monomial(Rational(1), den_.degree() - k);
                if (lead != 1) num_ *= Rational(1 / lead);
                return;
            }
            Poly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = Poly::divmod(num_, g).first;
                den_ = Poly::divmod(den_, g).first;
            }
            const Rational lead = den_.leading();
            if (lead != 1) {
                Rational inv = 1 / lead;
                num_ *= inv;
                den_ *= inv;
            }
            return;
        }
    }
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw DomainError("scalar " + str() + " is not a rational constant");
    return num_.coeff(0);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    field_ = join(field_, rhs.field_);
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (field_.kind == FieldKind::rational_function && !den_.is_one()) normalize();
        if (num_.is_zero()) den_ = Poly(Rational(1));
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    field_ = join(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return *this;
    }
    num_ *= rhs.num_;
    if (!rhs.den_.is_one()) den_ *= rhs.den_;
    if (field_.kind != FieldKind::rational) normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    switch (field_.kind) {
        case FieldKind::rational:
            return Scalar(Rational(1 / num_.coeff(0)));
        case FieldKind::cyclotomic: {
            auto [g, inv] = gcd_with_cofactor(num_, cyclotomic_polynomial(field_.order));
            if (!g.is_one()) throw DomainError("non-invertible element in " + field_.name());
            return Scalar(field_, std::move(inv), Poly(Rational(1)), true);
        }
        case FieldKind::rational_function:
            return Scalar(field_, den_, num_);
    }
    return {};
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result(field_, Poly(Rational(1)), Poly(Rational(1)), true);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.is_rational() && rhs.is_rational()) return lhs.num_.coeff(0) == rhs.num_.coeff(0);
    return lhs.field_ == rhs.field_ && lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
}

namespace {

Scalar horner(const Poly& p, const Scalar& x) {
    Scalar acc;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + Scalar(p.coeffs()[k]);
    return acc;
}

}  // namespace

Scalar Scalar::substitute_generator(const Scalar& image) const {
    if (is_rational()) return Scalar(num_.coeff(0));
    if (field_.kind == FieldKind::cyclotomic &&
        !horner(cyclotomic_polynomial(field_.order), image).is_zero())
        throw DomainError("substitution image is not a root of the cyclotomic polynomial of order " +
                          std::to_string(field_.order));
    const Scalar den = horner(den_, image);
    if (den.is_zero()) throw DomainError("substitution hits a pole");
    return horner(num_, image) / den;
}

std::string Scalar::str() const {
    switch (field_.kind) {
        case FieldKind::rational:
            return num_.is_zero() ? "0" : num_.coeff(0).get_str();
        case FieldKind::cyclotomic:
            return num_.str("q");
        case FieldKind::rational_function:
            break;
    }
    if (!den_.is_monomial()) return "(" + num_.str("s") + ")/(" + den_.str("s") + ")";
    // Laurent polynomial in s.
    if (num_.is_zero()) return "0";
    const long shift = static_cast<long>(den_.degree());
    std::string out;
    bool first = true;
    const auto& cs = num_.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        const long e = static_cast<long>(k) - shift;
        Rational mag = abs(cs[k]);
        if (first) {
            if (cs[k] < 0) out += "-";
        } else {
            out += cs[k] < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "s";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace bax
