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

#include <string>

#include "bax/matrix.hpp"
#include "bax/scalar.hpp"
#include "bax/ybe.hpp"

namespace bax::app {

/// A matrix together with the field its canonical strings are read in.
struct MatrixDocument {
    ParamMatrix matrix;
    Field field;
};

/// {"dim", "param", "field", "entries": [{"row", "col", "value"}]}, 1-based,
/// row-major, zero entries omitted, two-space indent, trailing newline.
std::string matrix_to_json(const MatrixDocument& doc);

/// Inverse of matrix_to_json; throws ParseError on malformed input.
MatrixDocument matrix_from_json(const std::string& text);

/// pmatrix environment; in Q(s) powers of s are written as powers of q^{1/2}.
std::string matrix_to_latex(const MatrixDocument& doc);
std::string scalar_to_latex(const ParamScalar& x, const Field& field);

std::string matrix_to_text(const MatrixDocument& doc);

std::string report_to_json(const YbeReport& report);
std::string report_to_text(const YbeReport& report);

}  // namespace bax::app
