#include "jt/sweep.hpp"

#include "jt/ansatz.hpp"
#include "jt/eb_model.hpp"
#include "jt/ee_model.hpp"
#include "jt/entanglement.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <ostream>

namespace jt {

namespace {

const double kNan = std::numeric_limits<double>::quiet_NaN();

struct RowParams {
    double coupling, c1, gamma, field;
};

RowParams row_params(const SweepSpec& spec, int i) {
    const double v = spec.min + (spec.max - spec.min) * i / (spec.count - 1.0);
    RowParams r{spec.coupling, spec.c1, spec.gamma, spec.field};
    switch (spec.variable) {
        case SweepVariable::coupling: r.coupling = v; break;
        case SweepVariable::c1: r.c1 = v; break;
        case SweepVariable::gamma: r.gamma = v; break;
        case SweepVariable::delta: r.field = v; break;
    }
    return r;
}

double state_qubit_entropy(const PureState& s) {
    return von_neumann_entropy(reduced_density(s, {0}));
}

SweepRecord eb_row(const SweepSpec& spec, const RowParams& r) {
    SweepRecord rec;
    rec.coupling_over_omega = r.coupling / spec.omega;
    rec.c1 = r.c1;
    rec.gamma = r.gamma;
    rec.delta = r.field;
    rec.ansatz_entropy = rec.abs_diff = rec.delta_s = kNan;

    EbParams p;
    p.coupling = r.coupling;
    p.omega = spec.omega;
    p.field = r.field;
    p.fock = spec.fock > 0 ? spec.fock : 40;

    if (r.field == 0.0) {
        // degenerate manifold: closed-form superposition observables
        rec.entropy = von_neumann_entropy(reduced_qubit_density_delta0(r.c1, r.gamma, p));
        rec.ground_energy = -r.coupling * r.coupling / (2.0 * spec.omega * spec.omega);
        DisplacedState ds = exact_eigenstate({Branch::Right, 0}, p);
        while (!ds.converged && 2 * p.fock <= 640) {
            p.fock *= 2;
            ds = exact_eigenstate({Branch::Right, 0}, p);
        }
        rec.fock = p.fock;
        rec.converged = ds.converged;
    } else {
        const EbGround g = converged_ground(p);
        rec.entropy = state_qubit_entropy(g.state);
        rec.ground_energy = g.energy;
        rec.fock = g.fock;
        rec.converged = g.converged;
    }
    return rec;
}

SweepRecord ee_row(const SweepSpec& spec, const RowParams& r, const GroundPair* shared_pair,
                   double shared_delta_s) {
    SweepRecord rec;
    rec.coupling_over_omega = r.coupling / spec.omega;
    rec.c1 = r.c1;
    rec.gamma = r.gamma;
    rec.delta = r.field;

    EeParams p;
    p.coupling = r.coupling;
    p.omega = spec.omega;
    p.field = r.field;
    p.fock = spec.fock > 0 ? spec.fock : 30;

    if (r.field == 0.0) {
        GroundPair local;
        const GroundPair* pair = shared_pair;
        if (!pair) {
            local = converged_ground_pair(p);
            pair = &local;
        }
        const PureState s = pair_superposition(*pair, r.c1, r.gamma);
        rec.entropy = state_qubit_entropy(s);
        rec.ground_energy = pair->energy;
        rec.fock = pair->fock;
        rec.converged = pair->converged;

        const AnsatzParams ap{r.coupling, spec.omega};
        rec.ansatz_entropy = von_neumann_entropy(
            superposition_density(SuperpositionSpec{r.c1, r.gamma}, ap));
        rec.abs_diff = std::abs(rec.entropy - rec.ansatz_entropy);
        if (shared_pair) {
            rec.delta_s = shared_delta_s;
        } else {
            EeParams pp = p;
            pp.fock = pair->fock;
            rec.delta_s = entanglement_gap(pair->psi, pp);
        }
    } else {
        const EeGround g = converged_ground(p);
        rec.entropy = state_qubit_entropy(g.state);
        rec.ground_energy = g.energy;
        rec.fock = g.fock;
        rec.converged = g.converged;
        rec.ansatz_entropy = rec.abs_diff = rec.delta_s = kNan;
    }
    return rec;
}

std::vector<SweepRecord> run_impl(const SweepSpec& spec, bool parallel) {
    spec.validate();

    // the degenerate pair is shared across rows when only the superposition
    // parameters vary
    std::unique_ptr<GroundPair> shared;
    double shared_ds = kNan;
    if (spec.model == Model::ee && spec.field == 0.0 &&
        (spec.variable == SweepVariable::c1 || spec.variable == SweepVariable::gamma)) {
        EeParams p;
        p.coupling = spec.coupling;
        p.omega = spec.omega;
        p.fock = spec.fock > 0 ? spec.fock : 30;
        shared = std::make_unique<GroundPair>(converged_ground_pair(p));
        p.fock = shared->fock;
        shared_ds = entanglement_gap(shared->psi, p);
    }

    std::vector<SweepRecord> rows(spec.count);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < spec.count; ++i) {
            const RowParams r = row_params(spec, i);
            rows[i] = spec.model == Model::eb ? eb_row(spec, r)
                                              : ee_row(spec, r, shared.get(), shared_ds);
        }
    } else {
        for (int i = 0; i < spec.count; ++i) {
            const RowParams r = row_params(spec, i);
            rows[i] = spec.model == Model::eb ? eb_row(spec, r)
                                              : ee_row(spec, r, shared.get(), shared_ds);
        }
    }
    return rows;
}

}  // namespace

void SweepSpec::validate() const {
    if (count < 2) throw std::invalid_argument("sweep count must be >= 2");
    if (!(min < max)) throw std::invalid_argument("sweep requires min < max");
    if (omega <= 0) throw std::invalid_argument("omega must be positive");
    if (coupling < 0 || field < 0)
        throw std::invalid_argument("coupling and field must be nonnegative");
    if (c1 < 0 || c1 > 1) throw std::invalid_argument("c1 must lie in [0, 1]");
    if (variable == SweepVariable::c1 && (min < 0 || max > 1))
        throw std::invalid_argument("c1 grid must lie in [0, 1]");
    if ((variable == SweepVariable::coupling || variable == SweepVariable::delta) && min < 0)
        throw std::invalid_argument("coupling/delta grid must be nonnegative");
}

Model parse_model(const std::string& name) {
    if (name == "eb") return Model::eb;
    if (name == "ee") return Model::ee;
    throw std::invalid_argument("unknown model '" + name + "' (expected eb or ee)");
}

SweepVariable parse_variable(const std::string& name) {
    if (name == "coupling") return SweepVariable::coupling;
    if (name == "c1") return SweepVariable::c1;
    if (name == "gamma") return SweepVariable::gamma;
    if (name == "delta") return SweepVariable::delta;
    throw std::invalid_argument("unknown sweep variable '" + name +
                                "' (expected coupling, c1, gamma, or delta)");
}

std::string to_string(Model m) { return m == Model::eb ? "eb" : "ee"; }

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::coupling: return "coupling";
        case SweepVariable::c1: return "c1";
        case SweepVariable::gamma: return "gamma";
        default: return "delta";
    }
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) { return run_impl(spec, true); }

std::vector<SweepRecord> run_sweep_serial(const SweepSpec& spec) {
    return run_impl(spec, false);
}

bool any_unconverged(const std::vector<SweepRecord>& rows) {
    for (const SweepRecord& r : rows)
        if (!r.converged) return true;
    return false;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::vector<std::string> column_names(const SweepSpec& spec) {
    std::vector<std::string> cols = {"L_over_omega", "c1", "gamma", "delta", "entropy"};
    if (spec.model == Model::ee) {
        cols.push_back("ansatz_entropy");
        cols.push_back("abs_diff");
        cols.push_back("delta_s");
    }
    cols.push_back("ground_energy");
    cols.push_back("N");
    cols.push_back("converged");
    return cols;
}

std::vector<std::string> row_cells(const SweepSpec& spec, const SweepRecord& r) {
    std::vector<std::string> cells = {format_number(r.coupling_over_omega), format_number(r.c1),
                                      format_number(r.gamma), format_number(r.delta),
                                      format_number(r.entropy)};
    if (spec.model == Model::ee) {
        cells.push_back(format_number(r.ansatz_entropy));
        cells.push_back(format_number(r.abs_diff));
        cells.push_back(format_number(r.delta_s));
    }
    cells.push_back(format_number(r.ground_energy));
    cells.push_back(std::to_string(r.fock));
    cells.push_back(r.converged ? "1" : "0");
    return cells;
}

}  // namespace

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& rows) {
    const auto cols = column_names(spec);
    for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const SweepRecord& r : rows) {
        const auto cells = row_cells(spec, r);
        for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << "\n";
    }
}

void write_json(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& rows) {
    nlohmann::ordered_json doc;
    doc["spec"] = {{"model", to_string(spec.model)},
                   {"variable", to_string(spec.variable)},
                   {"min", spec.min},
                   {"max", spec.max},
                   {"count", spec.count},
                   {"coupling", spec.coupling},
                   {"omega", spec.omega},
                   {"delta", spec.field},
                   {"c1", spec.c1},
                   {"gamma", spec.gamma}};
    doc["rows"] = nlohmann::ordered_json::array();
    const auto cols = column_names(spec);
    for (const SweepRecord& r : rows) {
        const auto cells = row_cells(spec, r);
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = cells[i];
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << "\n";
}

}  // namespace jt
