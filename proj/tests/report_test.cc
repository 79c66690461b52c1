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

#include "orthologic/report.h"

#include <cstdlib>
#include <sstream>

#include "gtest/gtest.h"

using namespace orthologic;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;

    json body() const {
        return json::parse(out);
    }
};

Outcome run_cfg(const RunConfig &cfg) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig lattice(size_t d, uint64_t seed = 7) {
    RunConfig cfg;
    cfg.command = Command::lattice_check;
    cfg.dim1 = d;
    cfg.trials = 20;
    cfg.seed = seed;
    return cfg;
}

RunConfig composite(size_t d1, size_t d2) {
    RunConfig cfg;
    cfg.command = Command::composite_verify;
    cfg.dim1 = d1;
    cfg.dim2 = d2;
    cfg.trials = 6;
    cfg.seed = 3;
    return cfg;
}

const json &law(const json &body, const std::string &name) {
    for (const json &l : body.at("laws")) {
        if (l.at("law") == name) {
            return l;
        }
    }
    throw std::runtime_error("no law " + name);
}

}  // namespace

TEST(report, lattice_check_reports_the_expected_pattern) {
    Outcome o = run_cfg(lattice(3));
    ASSERT_EQ(o.code, 0) << o.err;
    json j = o.body();
    EXPECT_EQ(j.at("schema"), kSchema);
    EXPECT_EQ(j.at("command"), "lattice-check");
    EXPECT_EQ(j.at("passed"), true);
    EXPECT_EQ(law(j, "distributive").at("status"), "fails");
    EXPECT_FALSE(law(j, "distributive").at("counterexample").is_null());
    for (const char *name : {"orthomodular", "de_morgan", "orthocomplement", "covering"}) {
        EXPECT_EQ(law(j, name).at("status"), "holds") << name;
    }
    EXPECT_EQ(j.at("nested_triple").size(), 6u);
}

TEST(report, identical_seeds_give_identical_bytes) {
    EXPECT_EQ(run_cfg(lattice(4, 11)).out, run_cfg(lattice(4, 11)).out);
    EXPECT_EQ(run_cfg(composite(3, 3)).out, run_cfg(composite(3, 3)).out);
    EXPECT_NE(run_cfg(lattice(4, 11)).out, run_cfg(lattice(4, 12)).out);
}

TEST(report, one_dimensional_lattice_cannot_break_distributivity) {
    Outcome o = run_cfg(lattice(1));
    EXPECT_EQ(o.code, 1);
    EXPECT_EQ(o.body().at("passed"), false);
}

TEST(report, classical_lattice_is_distributive) {
    RunConfig cfg;
    cfg.command = Command::lattice_check;
    cfg.classical = true;
    cfg.omega = 3;
    Outcome o = run_cfg(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    json j = o.body();
    EXPECT_EQ(j.at("propositions"), 8);
    EXPECT_EQ(law(j, "distributive").at("status"), "holds");
}

TEST(report, usage_errors_exit_two) {
    RunConfig cfg = lattice(0);
    Outcome o = run_cfg(cfg);
    EXPECT_EQ(o.code, 2);
    EXPECT_FALSE(o.err.empty());
    RunConfig big;
    big.command = Command::lattice_check;
    big.classical = true;
    big.omega = 40;
    EXPECT_EQ(run_cfg(big).code, 2);
    RunConfig neg = lattice(3);
    neg.eps_eq = -1;
    EXPECT_EQ(run_cfg(neg).code, 2);
}

TEST(report, environment_tolerance_is_reported) {
    setenv("ORTHOLOGIC_TOL", "1e-7", 1);
    json j = run_cfg(lattice(2)).body();
    unsetenv("ORTHOLOGIC_TOL");
    EXPECT_DOUBLE_EQ(j.at("tolerance").at("eps_eq").get<double>(), 1e-7);
    RunConfig cfg = lattice(2);
    cfg.eps_eq = 1e-6;
    EXPECT_DOUBLE_EQ(run_cfg(cfg).body().at("tolerance").at("eps_eq").get<double>(), 1e-6);
}

TEST(report, composite_cases_and_targets) {
    struct Want {
        bool twist;
        bool c1;
        bool c2;
        const char *kind;
        const char *target;
    };
    Want wants[] = {
        {false, false, false, "phi", "H1⊗H2"},
        {true, false, false, "phi", "H1⊗H2"},
        {true, true, true, "psi", "H1⊗H2"},
        {false, true, false, "mu", "H1*⊗H2"},
        {false, false, true, "nu", "H1*⊗H2"},
    };
    for (const Want &w : wants) {
        RunConfig cfg = composite(3, 4);
        cfg.twist = w.twist;
        cfg.conjugate_h1 = w.c1;
        cfg.conjugate_h2 = w.c2;
        Outcome o = run_cfg(cfg);
        ASSERT_EQ(o.code, 0) << o.err;
        json j = o.body();
        EXPECT_EQ(j.at("case"), w.kind);
        EXPECT_EQ(j.at("target"), w.target);
        EXPECT_EQ(j.at("m_morphism").size(), 2u);
    }
}

TEST(report, classical_composite) {
    RunConfig cfg;
    cfg.command = Command::composite_verify;
    cfg.classical = true;
    cfg.n1 = 2;
    cfg.n2 = 3;
    Outcome o = run_cfg(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    json j = o.body();
    EXPECT_EQ(j.at("mode"), "classical");
    EXPECT_EQ(j.at("bijective"), true);
    EXPECT_EQ(j.at("propositions"), 64);
}

TEST(report, truth_demo_values) {
    RunConfig cfg;
    cfg.command = Command::truth_demo;
    cfg.nmax = 4;
    cfg.energies = true;
    Outcome o = run_cfg(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    json j = o.body();
    EXPECT_NEAR(j.at("truth_values")[0].at("result").at("value").get<double>(), 0.75, 1e-12);
    EXPECT_NEAR(j.at("truth_values")[1].at("result").at("value").get<double>(), 0.25, 1e-12);
    ASSERT_EQ(j.at("energies").size(), 5u);
    EXPECT_DOUBLE_EQ(j.at("energies")[2].at("energy").get<double>(), 2.5);
}

TEST(report, eigenfunctions_need_a_csv_path) {
    RunConfig cfg;
    cfg.command = Command::truth_demo;
    cfg.eigenfunctions = true;
    EXPECT_EQ(run_cfg(cfg).code, 2);
}

TEST(report, phase_curve_is_csv) {
    RunConfig cfg;
    cfg.command = Command::phase_curve;
    cfg.samples = 5;
    Outcome o = run_cfg(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.substr(0, 6), "t,x,p\n");
}
