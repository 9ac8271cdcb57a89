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

#include "bax_app/job.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <json.hpp>
#include <sstream>

#include "bax/double.hpp"
#include "bax/errors.hpp"
#include "bax/taft.hpp"
#include "bax/uqsl2.hpp"
#include "bax_app/suite.hpp"

namespace bax::app {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

const char* extension(Format f) {
    switch (f) {
        case Format::json: return ".json";
        case Format::latex: return ".tex";
        case Format::text: return ".txt";
    }
    return ".txt";
}

std::string default_name(const JobConfig& c) {
    std::string name = to_string(c.command);
    switch (c.command) {
        case Command::taft:
            name += "_N" + std::to_string(c.N) + (c.alpha ? "_alpha" : "_n" + std::to_string(c.n)) + "_l" +
                    std::to_string(c.l);
            break;
        case Command::uqsl2: name += c.spin == "1" ? "_spin1" : "_spin12"; break;
        case Command::double_: name += "_N" + std::to_string(c.N); break;
        case Command::baxterize: name += c.spin_given ? (c.spin == "1" ? "_spin1" : "_spin12") : "_N" + std::to_string(c.N); break;
        case Command::verify: name += "_report"; break;
        case Command::all_regressions: break;
    }
    if (c.parametric) name += "_param";
    return name + extension(c.format);
}

void emit(const JobConfig& config, const std::string& artifact, std::ostream& out) {
    const std::string path = resolve_output(config, default_name(config));
    if (path.empty()) {
        out << artifact;
        return;
    }
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream file(p, std::ios::binary);
    if (!file) throw UsageError("cannot write output file " + path);
    file << artifact;
}

std::string render(const MatrixDocument& doc, Format f) {
    switch (f) {
        case Format::json: return matrix_to_json(doc);
        case Format::latex: return matrix_to_latex(doc);
        case Format::text: return matrix_to_text(doc);
    }
    return {};
}

std::string render(const YbeReport& r, Format f) {
    return f == Format::json ? report_to_json(r) : report_to_text(r);
}

TaftAlgebra taft_of(const JobConfig& c) { return build_taft(c.N, taft_root(c.N, c.q_power)); }

WeightedRep spin_of(const JobConfig& c) { return c.spin == "1" ? spin_one() : spin_half(); }

std::ostream& report_stream(const JobConfig& c, std::ostream& out, std::ostream& err) {
    return resolve_output(c, default_name(c)).empty() ? err : out;
}

YbeReport ybe_of(const ParamMatrix& m, bool parametric) {
    return parametric ? check_parametric_ybe(m) : check_constant_ybe(m);
}

int run_taft(const JobConfig& c, std::ostream& out, std::ostream& err) {
    const MatrixDocument doc = build_matrix(c);
    emit(c, render(doc, c.format), out);
    if (!c.verify) return exit_ok;
    const TaftAlgebra t = taft_of(c);
    const DrinfeldDouble d = build_double(t.hopf);
    const DoubleRepresentation rep =
        c.alpha ? rep_indecomposable(t, Scalar::parse(*c.alpha, t.q.field()), c.l) : rep_irreducible(t, c.n, c.l);
    const RepresentationReport rr = check_representation(d, rep);
    const YbeReport yr = ybe_of(doc.matrix, c.parametric);
    std::ostream& rs = report_stream(c, out, err);
    rs << render(yr, c.format);
    rs << "representation " << rep.name << ": " << (rr.passed ? "pass" : "FAIL") << '\n';
    for (const auto& f : rr.failures) rs << "  " << f << '\n';
    return yr.passed && rr.passed ? exit_ok : exit_verification_failed;
}

int run_uqsl2(const JobConfig& c, std::ostream& out, std::ostream& err) {
    const MatrixDocument doc = build_matrix(c);
    emit(c, render(doc, c.format), out);
    if (!c.verify) return exit_ok;
    const WeightedRepReport wr = check_weighted_rep(spin_of(c));
    const YbeReport yr = ybe_of(doc.matrix, c.parametric);
    std::ostream& rs = report_stream(c, out, err);
    rs << render(yr, c.format);
    rs << "representation relations: " << (wr.passed ? "pass" : "FAIL") << '\n';
    for (const auto& f : wr.failures) rs << "  " << f << '\n';
    return yr.passed && wr.passed ? exit_ok : exit_verification_failed;
}

ordered_json hopf_json(const HopfReport& r) {
    ordered_json j = ordered_json::object();
    for (const auto& check : r.checks)
        j[check.name] = check.passed ? ordered_json("pass") : ordered_json(check.counterexample);
    return j;
}

int run_double(const JobConfig& c, std::ostream& out) {
    const TaftAlgebra t = taft_of(c);
    const DrinfeldDouble d = build_double(t.hopf);
    ordered_json j;
    j["N"] = c.N;
    j["q"] = t.q.str();
    j["field"] = t.q.field().name();
    j["dim"] = d.algebra().dim();
    const HopfReport base = check_hopf_axioms(t.hopf);
    j["base_axioms"] = hopf_json(base);
    bool ok = base.passed();
    if (c.verify) {
        const HopfReport full = check_hopf_axioms(d.hopf);
        j["double_axioms"] = hopf_json(full);
        const CanonicalR r = canonical_r(d);
        const auto constant = check_constant_ybe_algebraic(d, r.double_form);
        j["canonical_r_terms"] = r.term_count();
        j["ybe_constant"] = constant.passed;
        ok = ok && full.passed() && constant.passed;
        if (c.parametric) {
            const ParamTensor rmu = to_double(d, baxterize(taft_graded_r(t)));
            const auto parametric = check_parametric_ybe_algebraic(d, rmu);
            j["ybe_parametric"] = parametric.passed;
            ok = ok && parametric.passed;
        }
    }
    std::string artifact;
    if (c.format == Format::json) {
        artifact = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& [key, value] : j.items())
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        artifact = os.str();
    }
    emit(c, artifact, out);
    return ok ? exit_ok : exit_verification_failed;
}

int run_baxterize(const JobConfig& c, std::ostream& out) {
    ordered_json j;
    GradedRElement g;
    std::vector<const FiniteAlgebra*> slots;
    std::optional<TaftAlgebra> t;
    std::optional<HopfAlgebra> dual_t;
    if (c.spin_given) {
        j["model"] = "uqsl2 " + spin_of(c).name;
        g = uqsl2_term_grading(spin_of(c));
    } else {
        t = taft_of(c);
        dual_t = dual(t->hopf);
        slots = {&t->hopf.algebra, &dual_t->algebra};
        j["model"] = "taft N=" + std::to_string(c.N) + " q=" + t->q.str();
        g = taft_graded_r(*t);
    }
    const auto show = [&](const auto& tensor) {
        if (slots.empty()) {
            std::ostringstream os;
            bool first = true;
            for (const auto& [k, v] : tensor.terms()) {
                os << (first ? "" : " + ") << '(' << v.str() << ")*[e^" << k[0] << " (x) f^" << k[1] << ']';
                first = false;
            }
            return os.str();
        }
        return format_tensor(tensor, std::span<const FiniteAlgebra* const>(slots));
    };
    ordered_json comps = ordered_json::array();
    for (const auto& [p, comp] : g.components)
        comps.push_back({{"degree", degree_str(p)}, {"terms", comp.size()}, {"element", show(comp)}});
    j["components"] = comps;
    const ParamTensor rmu = baxterize(g);
    j["r_mu"] = show(rmu);
    bool ok = true;
    if (c.verify) {
        if (t) {
            const DrinfeldDouble d = build_double(t->hopf);
            ok = check_parametric_ybe_algebraic(d, to_double(d, rmu)).passed;
        } else {
            ok = check_parametric_ybe(uqsl2_r_matrix(spin_of(c), true)).passed;
        }
        j["parametric_ybe"] = ok;
    }
    std::string artifact;
    if (c.format == Format::json) {
        artifact = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "model: " << j["model"].get<std::string>() << '\n';
        for (const auto& comp : comps)
            os << "R_" << comp["degree"].get<std::string>() << " = " << comp["element"].get<std::string>() << '\n';
        os << "R(mu) = " << j["r_mu"].get<std::string>() << '\n';
        if (c.verify) os << "parametric YBE: " << (ok ? "pass" : "FAIL") << '\n';
        artifact = os.str();
    }
    emit(c, artifact, out);
    return ok ? exit_ok : exit_verification_failed;
}

int run_verify(const JobConfig& c, std::ostream& out) {
    std::ifstream in(c.input, std::ios::binary);
    if (!in) throw UsageError("cannot read input file " + c.input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const MatrixDocument doc = matrix_from_json(buffer.str());
    std::vector<YbeReport> reports;
    if (doc.matrix.has_parameters()) {
        reports.push_back(check_parametric_ybe(doc.matrix));
    } else {
        reports.push_back(check_constant_ybe(doc.matrix));
        reports.push_back(braid_check(doc.matrix));
    }
    bool ok = true;
    std::string artifact;
    if (c.format == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(ordered_json::parse(report_to_json(r)));
        artifact = arr.dump(2) + "\n";
    } else {
        for (const auto& r : reports) artifact += report_to_text(r);
    }
    for (const auto& r : reports) ok = ok && r.passed;
    emit(c, artifact, out);
    return ok ? exit_ok : exit_verification_failed;
}

int run_all(std::ostream& out) {
    const auto results = run_acceptance_suite(out);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    out << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? exit_ok : exit_verification_failed;
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "taft") return Command::taft;
    if (name == "uqsl2") return Command::uqsl2;
    if (name == "double") return Command::double_;
    if (name == "baxterize") return Command::baxterize;
    if (name == "verify") return Command::verify;
    if (name == "all-regressions") return Command::all_regressions;
    throw UsageError("unknown command '" + name + "'");
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    if (name == "text") return Format::text;
    throw UsageError("unknown format '" + name + "' (json, latex or text)");
}

const char* to_string(Command c) {
    switch (c) {
        case Command::taft: return "taft";
        case Command::uqsl2: return "uqsl2";
        case Command::double_: return "double";
        case Command::baxterize: return "baxterize";
        case Command::verify: return "verify";
        case Command::all_regressions: return "all-regressions";
    }
    return "unknown";
}

void validate(const JobConfig& c) {
    const bool uses_taft = c.command == Command::taft || c.command == Command::double_ ||
                           (c.command == Command::baxterize && !c.spin_given);
    if (uses_taft) {
        if (c.N < 2) throw UsageError("--N must be at least 2");
        if (c.N > 12) throw UsageError("--N above 12 is not supported");
        if (std::gcd(c.q_power, c.N) != 1)
            throw UsageError("--q-power must be coprime to N so that q is a primitive root");
    }
    if (c.command == Command::taft) {
        if (c.l < 1 || c.l > c.N) throw UsageError("--rep: l must lie in [1, N]");
        if (!c.alpha && (c.n < 1 || c.n > c.N)) throw UsageError("--rep: n must lie in [1, N]");
    }
    if (c.spin != "1/2" && c.spin != "1") throw UsageError("--spin must be 1/2 or 1");
    if (c.command == Command::verify && c.input.empty()) throw UsageError("verify requires --input");
    if ((c.command == Command::double_ || c.command == Command::baxterize || c.command == Command::verify) &&
        c.format == Format::latex)
        throw UsageError(std::string(to_string(c.command)) + " supports --format json or text");
}

std::string resolve_output(const JobConfig& c, const std::string& fallback) {
    const char* dir = std::getenv("BAX_OUT_DIR");
    const bool have_dir = dir != nullptr && *dir != '\0';
    if (!c.output.empty()) {
        const fs::path p(c.output);
        return (p.is_relative() && have_dir) ? (fs::path(dir) / p).string() : p.string();
    }
    return have_dir ? (fs::path(dir) / fallback).string() : std::string();
}

MatrixDocument build_matrix(const JobConfig& c) {
    if (c.command == Command::uqsl2)
        return {uqsl2_r_matrix(spin_of(c), c.parametric), Field::rational_function()};
    if (c.command != Command::taft) throw UsageError("no matrix for this command");
    const TaftAlgebra t = taft_of(c);
    const DoubleRepresentation rep =
        c.alpha ? rep_indecomposable(t, Scalar::parse(*c.alpha, t.q.field()), c.l) : rep_irreducible(t, c.n, c.l);
    return {taft_r_matrix(t, rep, c.parametric), t.q.field()};
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::taft: return run_taft(config, out, err);
            case Command::uqsl2: return run_uqsl2(config, out, err);
            case Command::double_: return run_double(config, out);
            case Command::baxterize: return run_baxterize(config, out);
            case Command::verify: return run_verify(config, out);
            case Command::all_regressions: return run_all(out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

}  // namespace bax::app
