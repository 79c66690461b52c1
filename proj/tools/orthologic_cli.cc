// Copyright 2026 The Orthologic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "orthologic/report.h"

using orthologic::Command;
using orthologic::RunConfig;

namespace {

void add_common(CLI::App *app, RunConfig &cfg) {
    app->add_option("--trials", cfg.trials, "Random trials per law")->check(CLI::PositiveNumber);
    app->add_option("--seed", cfg.seed, "Base seed for every random draw");
    app->add_option("--tol", cfg.eps_eq, "Override eps_eq (after ORTHOLOGIC_TOL)");
    app->add_option("-o,--output", cfg.output, "Write the report to this file instead of stdout");
}

// CLI11 has no conditional requirement, so flags that are required only in
// one mode are checked here. Returns an error message or "".
std::string missing_flags(const CLI::App *sub, const RunConfig &cfg) {
    auto given = [sub](const char *flag) { return sub->count(flag) > 0; };
    switch (cfg.command) {
        case Command::lattice_check:
            if (cfg.classical && !given("--omega")) {
                return "--omega is required with --classical";
            }
            if (!cfg.classical && !given("--dim1")) {
                return "--dim1 is required";
            }
            break;
        case Command::composite_verify:
            if (cfg.classical && (!given("--n1") || !given("--n2"))) {
                return "--n1 and --n2 are required with --classical";
            }
            if (!cfg.classical && (!given("--dim1") || !given("--dim2"))) {
                return "--dim1 and --dim2 are required";
            }
            break;
        default:
            break;
    }
    return "";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Checks lattice laws of quantum and classical propositions and composite-system constructions"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App *lattice = app.add_subcommand("lattice-check", "Lattice laws on random C^d subspaces or a finite set");
    lattice->add_option("--dim1", cfg.dim1, "Dimension of C^d")->check(CLI::PositiveNumber);
    lattice->add_flag("--classical", cfg.classical, "Use the power set of a finite phase space");
    lattice->add_option("--omega", cfg.omega, "Number of phase-space points (classical)")->check(CLI::PositiveNumber);
    add_common(lattice, cfg);

    CLI::App *composite = app.add_subcommand("composite-verify", "Axioms and the tensor-product isomorphism");
    composite->add_option("--dim1", cfg.dim1, "Dimension of the first factor")->check(CLI::PositiveNumber);
    composite->add_option("--dim2", cfg.dim2, "Dimension of the second factor")->check(CLI::PositiveNumber);
    composite->add_flag("--twist", cfg.twist, "Compose both morphisms with one random unitary");
    composite->add_flag("--conjugate-h1", cfg.conjugate_h1, "Make h1 antilinear");
    composite->add_flag("--conjugate-h2", cfg.conjugate_h2, "Make h2 antilinear");
    composite->add_flag("--classical", cfg.classical, "Use finite phase spaces");
    composite->add_option("--n1", cfg.n1, "Points of the first phase space")->check(CLI::PositiveNumber);
    composite->add_option("--n2", cfg.n2, "Points of the second phase space")->check(CLI::PositiveNumber);
    add_common(composite, cfg);

    CLI::App *truth = app.add_subcommand("truth-demo", "Oscillator truth values, energies and eigenfunctions");
    truth->add_option("--nmax", cfg.nmax, "Highest oscillator level kept")->check(CLI::Range(2, 200));
    truth->add_flag("--energies", cfg.energies, "Include the energy table");
    truth->add_flag("--eigenfunctions", cfg.eigenfunctions, "Write sampled eigenfunctions to --csv");
    truth->add_option("--csv", cfg.csv, "CSV destination");
    add_common(truth, cfg);

    CLI::App *curve = app.add_subcommand("phase-curve", "Classical oscillator trajectory as t,x,p CSV");
    curve->add_option("--amplitude", cfg.amplitude, "Amplitude A");
    curve->add_option("--phase", cfg.phase, "Phase offset");
    curve->add_option("--omega0", cfg.omega0, "Angular frequency");
    curve->add_option("--mass", cfg.mass, "Mass");
    curve->add_option("--duration", cfg.duration, "Time span sampled from t = 0");
    curve->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
    curve->add_option("--csv", cfg.csv, "CSV destination (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App *chosen = app.get_subcommands().front();
    if (chosen == lattice) {
        cfg.command = Command::lattice_check;
    } else if (chosen == composite) {
        cfg.command = Command::composite_verify;
    } else if (chosen == truth) {
        cfg.command = Command::truth_demo;
    } else {
        cfg.command = Command::phase_curve;
    }
    std::string missing = missing_flags(chosen, cfg);
    if (!missing.empty()) {
        std::cerr << chosen->get_name() << ": " << missing << "\n\n" << chosen->help();
        return 2;
    }
    return orthologic::run(cfg, std::cout, std::cerr);
}
