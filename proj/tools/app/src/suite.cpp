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

#include "bax_app/suite.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "bax/double.hpp"
#include "bax/relation.hpp"
#include "bax/taft.hpp"
#include "bax/uqsl2.hpp"
#include "bax/ybe.hpp"
#include "bax_app/fixtures.hpp"
#include "bax_app/job.hpp"

namespace bax::app {
namespace {

namespace fs = std::filesystem;

/// Accumulates sub-check outcomes of one criterion.
struct Tally {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    std::string detail(const std::string& extra = {}) const {
        std::ostringstream os;
        os << checks - static_cast<int>(failures.size()) << "/" << checks << " checks";
        if (!extra.empty()) os << ", " << extra;
        for (std::size_t i = 0; i < failures.size() && i < 3; ++i) os << "; " << failures[i];
        return os.str();
    }
};

std::vector<int> primitive_powers(int N) {
    std::vector<int> out;
    for (int k = 1; k < N; ++k)
        if (std::gcd(k, N) == 1) out.push_back(k);
    return out;
}

JobConfig uq_job(const std::string& spin, bool parametric) {
    JobConfig c;
    c.command = Command::uqsl2;
    c.spin = spin;
    c.parametric = parametric;
    return c;
}

JobConfig taft_job(int N, int l, int k, bool parametric) {
    JobConfig c;
    c.command = Command::taft;
    c.N = N;
    c.n = 3;
    c.l = l;
    c.q_power = k;
    c.parametric = parametric;
    return c;
}

/// The emitted JSON, its re-parse, and the round trip check.
ParamMatrix through_json(const JobConfig& c, Tally& t, const std::string& what) {
    const std::string first = matrix_to_json(build_matrix(c));
    const MatrixDocument doc = matrix_from_json(first);
    t.expect(matrix_to_json(doc) == first, what + ": JSON round trip not byte-identical");
    return doc.matrix;
}

struct NamedMatrix {
    std::string name;
    ParamMatrix m;
};

std::vector<NamedMatrix> published_instances() {
    std::vector<NamedMatrix> out{{"spin-1/2", build_matrix(uq_job("1/2", true)).matrix},
                                 {"spin-1", build_matrix(uq_job("1", true)).matrix}};
    for (int k : primitive_powers(4))
        for (int l = 1; l <= 4; ++l)
            out.push_back({"taft N=4 k=" + std::to_string(k) + " l=" + std::to_string(l),
                           build_matrix(taft_job(4, l, k, true)).matrix});
    return out;
}

int run_verify_file(const ParamMatrix& m, const Field& field, const std::string& stem) {
    const fs::path dir = fs::temp_directory_path();
    const fs::path input = dir / ("bax_negative_" + stem + ".json");
    const fs::path report = dir / ("bax_negative_" + stem + ".report.json");
    {
        std::ofstream f(input, std::ios::binary);
        f << matrix_to_json({m, field});
    }
    JobConfig c;
    c.command = Command::verify;
    c.input = input.string();
    c.output = report.string();
    std::ostringstream out, err;
    const int code = run(c, out, err);
    fs::remove(input);
    fs::remove(report);
    return code;
}

// ---------------------------------------------------------------------------

CriterionResult c1_spin_half() {
    Tally t;
    const ParamMatrix m = through_json(uq_job("1/2", true), t, "spin-1/2");
    t.expect(m == reference_spin_half(), "spin-1/2 matrix differs from the published display");
    return {1, "spin-1/2 reconstruction", t.failures.empty(), 0, 1, t.detail("4x4 over Q(s)")};
}

CriterionResult c2_spin_one() {
    Tally t;
    const ParamMatrix m = through_json(uq_job("1", true), t, "spin-1");
    const ParamMatrix ref = reference_spin_one();
    t.expect(m == ref, "spin-1 matrix differs from the published display");
    t.expect(m.at(2, 6) == ref.at(2, 6), "(3,7) entry differs");
    return {2, "spin-1 reconstruction", t.failures.empty(), 0, 5, t.detail("(3,7) = " + m.at(2, 6).str())};
}

CriterionResult c3_taft() {
    Tally t;
    int instances = 0;
    for (int N : {3, 4, 5})
        for (int k : primitive_powers(N))
            for (int l = 1; l <= N; ++l) {
                const std::string tag = "N=" + std::to_string(N) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
                const ParamMatrix raw = through_json(taft_job(N, l, k, true), t, tag);
                const Scalar q = taft_root(N, k);
                const ParamMatrix ref = reference_taft(l, q);
                t.expect(normalize_first_entry(raw) == ref, tag + ": normalized matrix differs");
                t.expect(raw == ref * ParamScalar(q.pow(-static_cast<long>(l) * (l + 2))),
                         tag + ": raw matrix is not q^{-l(l+2)} times the display");
                ++instances;
            }
    return {3, "Taft 9x9 reconstruction", t.failures.empty(), 0, 10,
            t.detail(std::to_string(instances) + " (N,q,l) instances; raw = q^{-l(l+2)} x display")};
}

CriterionResult c4_parametric_ybe() {
    Tally t;
    for (const auto& [name, m] : published_instances()) {
        const YbeReport r = check_parametric_ybe(m);
        t.expect(r.passed, name + ": " + r.summary());
    }
    return {4, "parametric YBE identities", t.failures.empty(), 0, 120, t.detail()};
}

CriterionResult c5_constant_ybe() {
    Tally t;
    for (const auto& [name, m] : published_instances()) {
        const YbeReport r = check_constant_ybe(m.at_one());
        t.expect(r.passed, name + " at mu=1: " + r.summary());
    }
    for (const std::string spin : {"1/2", "1"})
        t.expect(build_matrix(uq_job(spin, true)).matrix.at_one() == build_matrix(uq_job(spin, false)).matrix,
                 "spin-" + spin + ": R(1) != un-baxterized image");
    for (int k : primitive_powers(4))
        for (int l = 1; l <= 4; ++l)
            t.expect(build_matrix(taft_job(4, l, k, true)).matrix.at_one() ==
                         build_matrix(taft_job(4, l, k, false)).matrix,
                     "taft l=" + std::to_string(l) + ": R(1) != canonical-R image");
    for (int N = 2; N <= 6; ++N) {
        const TaftAlgebra ta = build_taft(N, taft_root(N));
        t.expect(evaluate_at_one(baxterize(taft_graded_r(ta))) == taft_canonical_r(ta),
                 "N=" + std::to_string(N) + ": baxterized canonical R at mu=1 != R");
    }
    return {5, "constant YBE at mu=1 and baxterize consistency", t.failures.empty(), 0, 0, t.detail()};
}

CriterionResult c6_hopf() {
    Tally t;
    int algebras = 0;
    for (int N = 2; N <= 6; ++N)
        for (int k : primitive_powers(N)) {
            const HopfReport r = check_hopf_axioms(build_taft(N, taft_root(N, k)).hopf);
            for (const auto& c : r.checks)
                t.expect(c.passed, "N=" + std::to_string(N) + " k=" + std::to_string(k) + " " + c.name + ": " +
                                       c.counterexample);
            ++algebras;
        }
    TaftAlgebra bad = build_taft(3, taft_root(3));
    const BasisIndex x = bad.index(0, 1);
    bad.hopf.coproduct[x] = TensorElement(2);
    bad.hopf.coproduct[x].add_term({x, bad.index(0, 0)}, Scalar(1));  // drop the a (x) x term
    const HopfReport r = check_hopf_axioms(bad.hopf);
    std::string named;
    for (const auto& c : r.checks)
        if (!c.passed && named.empty()) named = c.name + ": " + c.counterexample;
    t.expect(!r.passed() && !named.empty(), "corrupted coproduct was not rejected with a counterexample");
    return {6, "Hopf axiom suite", t.failures.empty(), 0, 30,
            t.detail(std::to_string(algebras) + " algebras; corrupted -> " + named)};
}

CriterionResult c7_grading() {
    Tally t;
    for (int N = 2; N <= 6; ++N)
        for (int k : primitive_powers(N)) {
            const TaftAlgebra ta = build_taft(N, taft_root(N, k));
            const std::string tag = "N=" + std::to_string(N) + " k=" + std::to_string(k);
            const GradingReport m = check_grading(ta.hopf.algebra, ta.grading);
            const GradingReport c = check_coproduct_grading(ta.hopf, ta.grading);
            t.expect(m.passed && m.nontrivial, tag + ": multiplicative grading");
            t.expect(c.passed, tag + ": coproduct grading");
        }
    for (const WeightedRep& rep : {spin_half(), spin_one()}) {
        t.expect(check_term_grading(rep).passed, rep.name + ": term grading");
        const GradedRElement g = uqsl2_term_grading(rep);
        const ParamTensor rmu = baxterize(g);
        for (const auto& [key, c] : rmu.terms())
            t.expect(c.is_monomial() && c.terms().begin()->first == ParamExponents{static_cast<int>(key[0]), 0},
                     rep.name + ": mu exponent of term " + std::to_string(key[0]));
    }
    const TaftAlgebra ta = build_taft(4, taft_root(4));
    std::vector<int> wrong;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) wrong.push_back(i);
    const GradingReport w = check_coproduct_grading(ta.hopf, Grading::integer(wrong));
    t.expect(!w.passed && !w.violations.empty(), "wrong grading d(a^i x^j) = i passed the coproduct check");
    return {7, "grading suite", t.failures.empty(), 0, 0,
            t.detail(w.violations.empty() ? "" : "wrong grading -> " + w.violations.front())};
}

CriterionResult c8_dual_grading() {
    Tally t;
    for (int N = 2; N <= 5; ++N)
        for (int k : primitive_powers(N)) {
            const TaftAlgebra ta = build_taft(N, taft_root(N, k));
            const HopfAlgebra d = dual(ta.hopf);
            const Grading g = dual_grading(ta.hopf, ta.grading);
            const std::string tag = "N=" + std::to_string(N) + " k=" + std::to_string(k);
            t.expect(check_grading(d.algebra, g).passed, tag + ": dual multiplication not homogeneous");
            t.expect(check_coproduct_grading(d, g).passed, tag + ": dual coproduct not graded");
        }
    return {8, "dual grading instance", t.failures.empty(), 0, 0, t.detail()};
}

CriterionResult c9_algebraic_double() {
    Tally t;
    for (int N : {2, 3}) {
        const TaftAlgebra ta = build_taft(N, taft_root(N));
        const DrinfeldDouble d = build_double(ta.hopf);
        const CanonicalR r = canonical_r(d);
        t.expect(check_constant_ybe_algebraic(d, r.double_form).passed,
                 "D(T_" + std::to_string(N) + "): constant YBE");
        t.expect(check_parametric_ybe_algebraic(d, to_double(d, baxterize(taft_graded_r(ta)))).passed,
                 "D(T_" + std::to_string(N) + "): parametric YBE");
    }
    return {9, "algebraic double YBE", t.failures.empty(), 0, 60, t.detail("D(T_2), D(T_3)")};
}

CriterionResult c10_zn() {
    Tally t;
    for (int N = 2; N <= 6; ++N) {
        const TaftAlgebra ta = build_taft(N, taft_root(N));
        std::vector<Degree> lifted;
        for (const Degree& d : ta.grading.degrees()) lifted.push_back({d[0], 0});
        const Grading g2(lifted);
        const GradedRElement gz = decompose_graded(taft_canonical_r(ta), g2, g2);
        t.expect(baxterize_zn(gz, linear_degree_map({1, 1})) == baxterize(taft_graded_r(ta)),
                 "N=" + std::to_string(N) + ": Z^2 baxterization differs");
    }
    return {10, "Z^n consistency", t.failures.empty(), 0, 0, t.detail()};
}

CriterionResult c11_special_case() {
    Tally t;
    std::string found;
    for (int N : {3, 4, 5, 6}) {
        const Field big = Field::cyclotomic(4 * N);
        const Scalar z = Scalar::generator(big);
        const ParamMatrix taft =
            map_scalars(build_matrix(taft_job(N, N - 1, 1, true)).matrix,
                        [&](const Scalar& c) { return c.substitute_generator(z.pow(4)); });
        const ParamMatrix spin = map_scalars(build_matrix(uq_job("1", true)).matrix,
                                             [&](const Scalar& c) { return c.substitute_generator(z); });
        const RelationSearch s = find_diagonal_relation(taft, spin);
        t.expect(s.relation.has_value(), "N=" + std::to_string(N) + ": " + s.reason);
        if (N == 4 && s.relation) {
            const Scalar qt = z.pow(4);
            found = "N=4: lambda = " + s.relation->lambda.str() +
                    (s.relation->lambda == qt ? " = q_T" : "") + " with q_U^2 = q_T";
        }
    }
    return {11, "l = N-1 special case", t.failures.empty(), 0, 0, t.detail(found)};
}

CriterionResult c12_negative() {
    Tally t;
    const Field rf = Field::rational_function();

    ParamMatrix half = build_matrix(uq_job("1/2", false)).matrix;
    half.set(1, 2, half.at(1, 2) * ParamScalar(2));
    const YbeReport a = check_constant_ybe(half);
    t.expect(!a.passed && !a.residual.is_zero(), "doubled spin-1/2 (2,3): constant YBE passed");
    t.expect(!braid_check(half).passed, "doubled spin-1/2 (2,3): braid check passed");
    t.expect(run_verify_file(half, rf, "spin_half") == exit_verification_failed, "doubled spin-1/2: exit code != 1");

    ParamMatrix one = build_matrix(uq_job("1", true)).matrix;
    one.set(2, 6, one.at(2, 6) * ParamScalar(2));
    const YbeReport b = check_parametric_ybe(one);
    t.expect(!b.passed && !b.residual.is_zero(), "perturbed spin-1 (3,7): parametric YBE passed");
    t.expect(run_verify_file(one, rf, "spin_one") == exit_verification_failed, "perturbed spin-1: exit code != 1");

    ParamMatrix taft = build_matrix(taft_job(4, 2, 1, true)).matrix;
    taft.set(4, 6, taft.at(4, 6) * ParamScalar(3));
    const YbeReport c = check_parametric_ybe(taft);
    t.expect(!c.passed, "perturbed Taft (5,7): parametric YBE passed");
    t.expect(run_verify_file(taft, Field::cyclotomic(4), "taft") == exit_verification_failed,
             "perturbed Taft: exit code != 1");
    return {12, "negative controls", t.failures.empty(), 0, 0,
            t.detail("spin-1/2 residual nonzeros " + std::to_string(a.residual.nonzeros()) +
                     ", spin-1 worst " + (b.worst ? b.worst->value.str() : "none"))};
}

}  // namespace

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds << " s";
    if (r.limit_seconds > 0) os << ", limit " << r.limit_seconds << " s";
    os << "): " << r.detail;
    return os.str();
}

std::vector<CriterionResult> run_acceptance_suite(std::ostream& log) {
    const std::vector<std::function<CriterionResult()>> criteria{
        c1_spin_half, c2_spin_one, c3_taft, c4_parametric_ybe, c5_constant_ybe, c6_hopf,
        c7_grading, c8_dual_grading, c9_algebraic_double, c10_zn, c11_special_case, c12_negative};
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = criteria[i]();
        } catch (const std::exception& e) {
            r = {static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false, 0, 0,
                 std::string("exception: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
            r.passed = false;
            r.detail += "; time limit exceeded";
        }
        log << format_result(r) << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace bax::app
