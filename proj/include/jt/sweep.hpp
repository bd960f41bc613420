#pragma once

#include "jt/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace jt {

enum class Model { eb, ee };
enum class SweepVariable { coupling, c1, gamma, delta };

Model parse_model(const std::string& name);
SweepVariable parse_variable(const std::string& name);
std::string to_string(Model m);
std::string to_string(SweepVariable v);

struct SweepSpec {
    Model model = Model::eb;
    SweepVariable variable = SweepVariable::coupling;
    double min = 0.0, max = 1.0;
    int count = 2;
    // fixed parameter values (the swept one is overridden per row)
    double coupling = 1.0, omega = 1.0, field = 0.0;
    double c1 = 0.70710678118654752, gamma = 0.0;
    int fock = 0;  // 0: model default starting truncation

    void validate() const;
};

struct SweepRecord {
    double coupling_over_omega = 0, c1 = 0, gamma = 0, delta = 0;
    double entropy = 0;
    double ground_energy = 0;
    // two-mode extras (NaN when not applicable)
    double ansatz_entropy = 0, abs_diff = 0, delta_s = 0;
    int fock = 0;
    bool converged = true;
};

/// Row-parallel sweep (OpenMP when available); rows returned in grid order.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Serial reference path; must produce results identical to run_sweep.
std::vector<SweepRecord> run_sweep_serial(const SweepSpec& spec);

bool any_unconverged(const std::vector<SweepRecord>& rows);

/// Deterministic emitters: 12 significant digits, '.' decimal point.
void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& rows);
void write_json(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& rows);

std::string format_number(double v);

}  // namespace jt
