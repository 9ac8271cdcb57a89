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

// Grammar:
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := atom ('^' exponent)?
//   exponent := ['-'] integer | '(' ['-'] integer ')'
//   atom     := integer | 'q' | 's' | 'mu' | 'nu' | '(' expr ')'

#include <cctype>

#include "bax/errors.hpp"
#include "bax/param_scalar.hpp"

namespace bax {

namespace {

class Parser {
public:
    Parser(const std::string& text, Field field) : text_(text), field_(field) {}

    ParamScalar parse() {
        ParamScalar value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + text_ + "\": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamScalar expr() {
        ParamScalar value = term();
        for (;;) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    ParamScalar term() {
        ParamScalar value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                value = divide(value, unary());
            } else {
                return value;
            }
        }
    }

    ParamScalar divide(const ParamScalar& num, const ParamScalar& den) {
        if (den.is_zero()) fail("division by zero");
        try {
            if (den.is_constant()) return num * den.constant_value().inverse();
            return num.divided_by(den);
        } catch (const DomainError& e) {
            fail(e.what());
        }
    }

    ParamScalar unary() {
        if (accept('-')) return -unary();
        return power();
    }

    ParamScalar power() {
        ParamScalar base = atom();
        if (!accept('^')) return base;
        const long e = exponent();
        if (e >= 0) {
            ParamScalar out(1);
            for (long k = 0; k < e; ++k) out *= base;
            return out;
        }
        ParamScalar out(1);
        for (long k = 0; k < -e; ++k) out = divide(out, base);
        return out;
    }

    long exponent() {
        const bool paren = accept('(');
        const bool negative = accept('-');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const long value = std::stol(text_.substr(start, pos_ - start));
        if (paren && !accept(')')) fail("expected ')'");
        return negative ? -value : value;
    }

    ParamScalar atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ParamScalar inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ParamScalar(Scalar(Rational(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            if (name == "mu") return ParamScalar::mu();
            if (name == "nu") return ParamScalar::nu();
            if (name == "q") {
                if (field_.kind == FieldKind::rational) fail("'q' is undefined in the rational field");
                return ParamScalar(Scalar::q(field_));
            }
            if (name == "s") {
                if (field_.kind != FieldKind::rational_function) fail("'s' requires the rational-function field");
                return ParamScalar(Scalar::generator(field_));
            }
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    Field field_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamScalar parse_param_scalar(const std::string& text, Field field) { return Parser(text, field).parse(); }

Scalar Scalar::parse(const std::string& text, Field field) {
    const ParamScalar value = parse_param_scalar(text, field);
    if (!value.is_constant()) throw ParseError("\"" + text + "\" depends on mu or nu");
    Scalar out = value.constant_term();
    if (out.field().kind == FieldKind::rational && field.kind != FieldKind::rational)
        out = Scalar(field, out.numerator());
    return out;
}

}  // namespace bax
