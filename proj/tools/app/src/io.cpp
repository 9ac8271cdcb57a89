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

#include "bax_app/io.hpp"

#include <json.hpp>
#include <regex>
#include <set>
#include <sstream>

#include "bax/errors.hpp"

namespace bax::app {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json entries_json(const ParamMatrix& m) {
    ordered_json entries = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            entries.push_back({{"row", r + 1}, {"col", c + 1}, {"value", v.str()}});
    return entries;
}

std::string power_of_q(long k) {
    if (k % 2 == 0) return k / 2 == 1 ? "q" : "q^{" + std::to_string(k / 2) + "}";
    return std::string("q^{") + (k < 0 ? "-" : "") + "\\frac{" + std::to_string(std::labs(k)) + "}{2}}";
}

}  // namespace

std::string matrix_to_json(const MatrixDocument& doc) {
    ordered_json j;
    j["dim"] = doc.matrix.rows();
    j["param"] = doc.matrix.has_parameters() ? ordered_json("mu") : ordered_json(nullptr);
    j["field"] = doc.field.name();
    j["entries"] = entries_json(doc.matrix);
    return j.dump(2) + "\n";
}

MatrixDocument matrix_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    try {
        const std::size_t dim = j.at("dim").get<std::size_t>();
        if (dim == 0) throw ParseError("matrix JSON: dim must be positive");
        const Field field = j.contains("field") ? Field::parse(j["field"].get<std::string>()) : Field::rational_function();
        const auto& param = j.at("param");
        if (!param.is_null() && param != "mu") throw ParseError("matrix JSON: param must be \"mu\" or null");
        MatrixDocument doc{ParamMatrix(dim, dim), field};
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& e : j.at("entries")) {
            const std::size_t r = e.at("row").get<std::size_t>();
            const std::size_t c = e.at("col").get<std::size_t>();
            if (r < 1 || c < 1 || r > dim || c > dim)
                throw ParseError("matrix JSON: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") out of range");
            if (!seen.emplace(r, c).second)
                throw ParseError("matrix JSON: duplicate entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
            doc.matrix.set(r - 1, c - 1, parse_param_scalar(e.at("value").get<std::string>(), field));
        }
        if (param.is_null() && doc.matrix.has_parameters())
            throw ParseError("matrix JSON: param is null but an entry depends on mu or nu");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

std::string scalar_to_latex(const ParamScalar& x, const Field& field) {
    std::string s = x.str();
    s = std::regex_replace(s, std::regex(R"(\bmu\b)"), "\\mu");
    s = std::regex_replace(s, std::regex(R"(\bnu\b)"), "\\nu");
    if (field.kind == FieldKind::rational_function) {
        static const std::regex power(R"(\bs(\^(-?\d+))?\b)");
        std::string out;
        auto it = std::sregex_iterator(s.begin(), s.end(), power);
        std::size_t last = 0;
        for (; it != std::sregex_iterator(); ++it) {
            const auto& m = *it;
            out += s.substr(last, m.position() - last);
            out += power_of_q(m[2].matched ? std::stol(m[2].str()) : 1);
            last = m.position() + m.length();
        }
        s = out + s.substr(last);
    }
    s = std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
    s = std::regex_replace(s, std::regex(R"(\*)"), " ");
    return s;
}

std::string matrix_to_latex(const MatrixDocument& doc) {
    const ParamMatrix& m = doc.matrix;
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) os << " & ";
            const ParamScalar v = m.at(r, c);
            os << (v.is_zero() ? "0" : scalar_to_latex(v, doc.field));
        }
        os << (r + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

std::string matrix_to_text(const MatrixDocument& doc) {
    std::ostringstream os;
    os << "dim " << doc.matrix.rows() << ", field " << doc.field.name() << ", "
       << (doc.matrix.has_parameters() ? "parametric" : "constant") << '\n'
       << doc.matrix.str();
    return os.str();
}

std::string report_to_json(const YbeReport& report) {
    ordered_json j;
    j["kind"] = to_string(report.kind);
    j["dimension"] = report.dimension;
    j["passed"] = report.passed;
    j["residual_nonzeros"] = report.residual.nonzeros();
    if (report.worst)
        j["worst"] = {{"row", report.worst->row}, {"col", report.worst->col}, {"value", report.worst->value.str()}};
    else
        j["worst"] = nullptr;
    return j.dump(2) + "\n";
}

std::string report_to_text(const YbeReport& report) { return report.summary() + "\n"; }

}  // namespace bax::app
