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

#ifndef ORTHOLOGIC_REPORT_H
#define ORTHOLOGIC_REPORT_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

namespace orthologic {

inline constexpr const char *kSchema = "orthologic/1";

enum class ExitCode : int { pass = 0, verification_failure = 1, usage = 2 };

enum class Command { lattice_check, composite_verify, truth_demo, phase_curve };

std::string to_string(Command c);

struct RunConfig {
    Command command = Command::lattice_check;
    bool classical = false;
    size_t dim1 = 0;
    size_t dim2 = 0;
    // Classical point counts.
    size_t omega = 0;
    size_t n1 = 0;
    size_t n2 = 0;
    size_t trials = 50;
    uint64_t seed = 0;
    /// Overrides eps_eq after ORTHOLOGIC_TOL has been applied.
    std::optional<double> eps_eq;

    bool twist = false;
    bool conjugate_h1 = false;
    bool conjugate_h2 = false;

    int nmax = 10;
    bool energies = false;
    bool eigenfunctions = false;
    /// Eigenfunction or phase-curve CSV destination; empty means none
    /// (phase-curve writes to the report stream instead).
    std::string csv;

    double amplitude = 1;
    double phase = 0;
    double omega0 = 1;
    double mass = 1;
    double duration = 10;
    size_t samples = 101;

    /// Report destination; empty means the caller's stream.
    std::string output;

    /// Throws InvalidParameter for out-of-range settings.
    void validate() const;
};

/// Each returns the exit code and writes its JSON report (or CSV for the
/// phase curve) to `out`. Errors that make the run meaningless go to `err`.
/// Sub-seeds come from derive_seed(seed, command name, trial).
int run_lattice_check(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_composite_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_truth_demo(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_phase_curve(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Dispatches on cfg.command, honours cfg.output, and maps library errors to
/// exit code 2 with a message on `err`.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

}  // namespace orthologic

#endif
