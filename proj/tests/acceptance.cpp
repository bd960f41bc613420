// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.
#include "jt/ansatz.hpp"
#include "jt/classical.hpp"
#include "jt/eb_model.hpp"
#include "jt/ee_model.hpp"
#include "jt/entanglement.hpp"
#include "jt/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace jt;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", title,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double pair_entropy(const GroundPair& pair, double c1, double gamma) {
    return von_neumann_entropy(reduced_density(pair_superposition(pair, c1, gamma), {0}));
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const double coupling : {0.5, 1.0, 2.0}) {
        EbParams p;
        p.coupling = coupling;
        const EbGround g = converged_ground(p, 120);
        const double exact = -coupling * coupling / 2.0;
        const double err = std::abs(g.energy - exact);
        pass = pass && g.converged && err < 1e-8 && g.fock <= 120;
        detail += "L=" + fmt(coupling) + " err=" + fmt(err) + " ";
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 5.0;
    report(1, "field-free ground energies -L^2/(2 w^2)", pass, detail + "t=" + fmt(dt) + "s");
}

void criterion_2() {
    SweepSpec spec;
    spec.model = Model::eb;
    spec.variable = SweepVariable::coupling;
    spec.min = 0.25;
    spec.max = 8.0;
    spec.count = 16;
    double worst = 0.0;
    for (const double c1 : {0.0, 1.0}) {
        spec.c1 = c1;
        for (const SweepRecord& r : run_sweep(spec)) worst = std::max(worst, r.entropy);
    }
    report(2, "pure-branch states are separable", worst < 1e-10, "max S=" + fmt(worst));
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    EbParams p;
    p.coupling = 8.0;
    p.field = 1.0;
    p.fock = 40;
    const EbGround g = converged_ground(p);
    const double s = von_neumann_entropy(reduced_density(g.state, {0}));
    const double dt = seconds_since(t0);
    report(3, "field-forced cat state is maximally entangled", s >= 0.99 && dt < 30.0,
           "S=" + fmt(s) + " N=" + std::to_string(g.fock) + " t=" + fmt(dt) + "s");
}

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (const auto& [field, omega] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {4.0, 1.0}, {1.0, 2.0}}) {
        EbParams p;
        p.field = field;
        p.omega = omega;
        const double found = bifurcation_threshold_eb(p);
        const double expect = std::sqrt(field) * omega;
        pass = pass && std::abs(found - expect) < 1e-6;
        detail += fmt(found) + "/" + fmt(expect) + " ";
    }
    report(4, "classical pitchfork threshold sqrt(Delta) w", pass, detail);
}

void criterion_5() {
    EbParams p;
    p.coupling = 1.0;
    p.field = 0.5;
    p.fock = 60;
    const auto ef = hermitian_eig(build_hamiltonian_fock(p), 5);
    const auto ed = hermitian_eig(build_hamiltonian_displaced(p), 5);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(ef[i].value - ed[i].value));
    report(5, "displaced and plain Fock bases agree", worst < 1e-7, "max dev=" + fmt(worst));
}

void criterion_6() {
    EeParams p;
    p.coupling = 1.0;
    p.field = 0.5;
    p.fock = 20;
    const ConservedJ cj = conserved_j_w(p);
    report(6, "angular momentum + spin/2 is conserved",
           cj.spin_factor == 0.5 && cj.residual_half <= 1e-10,
           "s=" + fmt(cj.spin_factor) + " residual=" + fmt(cj.residual_half));
}

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const double pi = 3.14159265358979323846;
    bool pass = true;
    std::string detail;
    for (const double coupling : {0.5, 1.0, 2.0}) {
        EeParams p;
        p.coupling = coupling;
        p.fock = 25;
        const GroundPair pair = ground_pair_at(p);
        double lo = 2.0;
        for (int ic = 0; ic <= 20; ++ic)
            for (int ig = 0; ig <= 20; ++ig)
                lo = std::min(lo, pair_entropy(pair, ic / 20.0, 2.0 * pi * ig / 20.0));
        pass = pass && lo > 0.01;
        detail += "L=" + fmt(coupling) + " minS=" + fmt(lo) + " ";
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 300.0;
    report(7, "two-mode ground superpositions never separable", pass,
           detail + "t=" + fmt(dt) + "s");
}

void criterion_8() {
    AnsatzParams strong;
    strong.coupling = 10.0;  // kappa = 5
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double plateau =
        von_neumann_entropy(superposition_density({inv_sqrt2, 0.0}, strong));

    EeParams p;
    p.coupling = 4.0;
    p.fock = 20;
    const GroundPair pair = converged_ground_pair(p);
    const double exact = pair_entropy(pair, inv_sqrt2, 0.0);
    const AnsatzParams at4{4.0, 1.0};
    const double ansatz4 =
        von_neumann_entropy(superposition_density({inv_sqrt2, 0.0}, at4));
    const bool pass =
        std::abs(plateau - 0.8113) < 0.002 && std::abs(exact - ansatz4) < 0.05;
    report(8, "strong-coupling entropy plateau near 0.8113", pass,
           "plateau=" + fmt(plateau) + " exact(L=4)=" + fmt(exact) +
               " ansatz(L=4)=" + fmt(ansatz4));
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    for (const double coupling : {0.25, 4.0}) {
        EeParams p;
        p.coupling = coupling;
        p.fock = 20;
        const GroundPair pair = converged_ground_pair(p);
        const double exact = von_neumann_entropy(reduced_density(pair.psi, {0}));
        const AnsatzParams ap{coupling, 1.0};
        const double ansatz = von_neumann_entropy(single_state_density(ap));
        pass = pass && std::abs(exact - ansatz) <= 0.05;
        detail += "L=" + fmt(coupling) + " |dS|=" + fmt(std::abs(exact - ansatz)) + " ";
    }
    report(9, "single-state ansatz tracks exact diagonalization", pass, detail);
}

void criterion_10() {
    double ds[3];
    const double couplings[3] = {0.5, 1.0, 4.0};
    for (int i = 0; i < 3; ++i) {
        EeParams p;
        p.coupling = couplings[i];
        p.fock = 20;
        const GroundPair pair = converged_ground_pair(p);
        p.fock = pair.fock;
        ds[i] = entanglement_gap(pair.psi, p);
    }
    const bool pass = ds[2] <= ds[1] && ds[1] <= ds[0] && ds[2] <= 0.02;
    report(10, "entanglement gap decreases and vanishes asymptotically", pass,
           "dS(0.5)=" + fmt(ds[0]) + " dS(1)=" + fmt(ds[1]) + " dS(4)=" + fmt(ds[2]));
}

void criterion_11() {
    bool pass = true;
    std::string detail;
    double argmax_prev = -1.0;
    for (const double field : {1.0, 4.0}) {
        SweepSpec spec;
        spec.model = Model::ee;
        spec.variable = SweepVariable::coupling;
        spec.min = 0.5;
        spec.max = 6.5;
        spec.count = 13;
        spec.field = field;
        spec.fock = 16;
        const auto rows = run_sweep(spec);
        double best_slope = -1.0, argmax = 0.0;
        for (size_t i = 1; i < rows.size(); ++i) {
            const double slope = rows[i].entropy - rows[i - 1].entropy;
            if (slope < -1e-9) pass = false;  // monotone increasing
            if (slope > best_slope) {
                best_slope = slope;
                argmax = 0.5 * (rows[i].coupling_over_omega + rows[i - 1].coupling_over_omega);
            }
        }
        if (argmax_prev >= 0.0 && argmax <= argmax_prev) pass = false;
        detail += "D=" + fmt(field) + " steepest@L=" + fmt(argmax) + " ";
        argmax_prev = argmax;
    }
    report(11, "transverse-field curves are monotone, shifted with Delta", pass, detail);
}

void criterion_12() {
    std::mt19937 rng(12345);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        PureState s;
        s.factor_dims = {2, 2};
        s.amplitudes.resize(4);
        for (int i = 0; i < 4; ++i) s.amplitudes(i) = Complex(g(rng), g(rng));
        s.normalize();
        const double se = von_neumann_entropy(reduced_density(s, {0}));
        const double c = concurrence(density_of(s));
        worst = std::max(worst, std::abs(se - tangle_to_entropy(c * c)));
    }
    report(12, "entropy and concurrence routes agree on pure states", worst < 1e-10,
           "max dev=" + fmt(worst));
}

void criterion_13() {
#ifdef JT_CLI_PATH
    const std::string cmd = std::string(JT_CLI_PATH) +
                            " sweep --model eb --sweep coupling --min 0.5 --max 2"
                            " --count 5 --delta 0.5 --fock 20 --out ";
    bool pass = true;
    std::string files[2] = {"acceptance_sweep_a.csv", "acceptance_sweep_b.csv"};
    for (const auto& f : files)
        if (std::system((cmd + f).c_str()) != 0) pass = false;
    std::string contents[2];
    for (int i = 0; i < 2; ++i) {
        std::ifstream in(files[i], std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        contents[i] = buf.str();
        std::remove(files[i].c_str());
    }
    pass = pass && !contents[0].empty() && contents[0] == contents[1];
    report(13, "CLI sweeps are byte-identical across runs", pass,
           std::to_string(contents[0].size()) + " bytes");
#else
    report(13, "CLI sweeps are byte-identical across runs", false, "CLI path not configured");
#endif
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures == 0 ? 0 : 1;
}
