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

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "bax_app/job.hpp"

namespace {

using bax::app::JobConfig;

/// "n,l" -> (n, l).
void parse_rep(const std::string& text, JobConfig& c) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            c.l = std::stoi(text);
            return;
        }
        c.n = std::stoi(text.substr(0, comma));
        c.l = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw bax::app::UsageError("--rep expects n,l (or l with --alpha)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bax: graded Hopf algebras, Drinfeld doubles and Baxterized R-matrices"};
    app.require_subcommand(1);

    JobConfig config;
    std::string format = "json";
    std::string rep;
    std::string alpha;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: json, latex or text");
        sub->add_option("-o,--output", config.output, "Output path (relative paths resolve under BAX_OUT_DIR)");
        sub->add_flag("--verify", config.verify, "Run the exact checks and report");
    };
    const auto add_taft = [&](CLI::App* sub) {
        sub->add_option("--N", config.N, "Taft order N >= 2");
        sub->add_option("--q-power", config.q_power, "Use q = z^k for the primitive root z");
        sub->add_flag("--parametric", config.parametric, "Insert the spectral parameter mu");
    };

    CLI::App* taft = app.add_subcommand("taft", "R-matrix of the Taft algebra in a representation of its double");
    add_taft(taft);
    add_common(taft);
    taft->add_option("--rep", rep, "Irreducible labels n,l (with --alpha: l)");
    taft->add_option("--alpha", alpha, "Use the N-dimensional indecomposable representation with this alpha");

    CLI::App* uq = app.add_subcommand("uqsl2", "R-matrix of U_q[sl(2)] in the spin-1/2 or spin-1 representation");
    uq->add_option("--spin", config.spin, "1/2 or 1");
    uq->add_flag("--parametric", config.parametric, "Insert the spectral parameter mu");
    add_common(uq);

    CLI::App* dbl = app.add_subcommand("double", "Drinfeld double of a Taft algebra and its canonical R");
    add_taft(dbl);
    add_common(dbl);

    CLI::App* bx = app.add_subcommand("baxterize", "Graded components and R(mu) of a canonical R");
    add_taft(bx);
    add_common(bx);
    CLI::Option* spin_opt = bx->add_option("--spin", config.spin, "Use the U_q[sl(2)] series instead of Taft");

    CLI::App* verify = app.add_subcommand("verify", "Check a matrix JSON file against the Yang-Baxter equation");
    verify->add_option("--input", config.input, "Matrix JSON file")->required();
    add_common(verify);

    CLI::App* all = app.add_subcommand("all-regressions", "Run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bax::app::exit_usage;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        config.command = bax::app::parse_command(chosen->get_name());
        config.format = bax::app::parse_format(format);
        if (!alpha.empty()) config.alpha = alpha;
        if (!rep.empty()) parse_rep(rep, config);
        config.spin_given = spin_opt->count() > 0;
        if (chosen == all) config.format = bax::app::Format::text;
    } catch (const bax::app::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return bax::app::exit_usage;
    }
    return bax::app::run(config, std::cout, std::cerr);
}
