#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jt/eb_model.hpp"
#include "jt/entanglement.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace jt;

namespace {

double ground_entropy(const EbGround& g) {
    return von_neumann_entropy(reduced_density(g.state, {0}));
}

std::vector<double> lowest_k(const OperatorMatrix& h, int k) {
    const auto pairs = hermitian_eig(h, k);
    std::vector<double> vals;
    for (const auto& p : pairs) vals.push_back(p.value);
    return vals;
}

}  // namespace

TEST_CASE("displacement matrix against matrix-exponential oracle") {
    const int fock = 60;
    for (const Complex beta : {Complex(0.8, 0.0), Complex(-1.7, 0.0), Complex(1.2, -0.9)}) {
        const Matrix a = annihilation(fock);
        const Matrix gen = beta * a.adjoint() - std::conj(beta) * a;
        const Matrix oracle = gen.exp();
        const Matrix table = displacement_matrix(fock, beta);
        // compare away from the truncation edge, where expm is exact
        for (int m = 0; m <= 20; ++m)
            for (int n = 0; n <= 20; ++n)
                CHECK(std::abs(table(m, n) - oracle(m, n)) < 1e-12);
    }
}

TEST_CASE("displacement element unitarity relations") {
    const Complex beta(0.9, 0.4);
    // D(beta)^dag = D(-beta)
    for (int m = 0; m < 8; ++m)
        for (int n = 0; n < 8; ++n)
            CHECK(std::abs(displacement_matrix_element(m, n, beta) -
                           std::conj(displacement_matrix_element(n, m, -beta))) < 1e-14);
    // vacuum column: |<n|D|0>|^2 Poissonian
    const double x = std::norm(beta);
    double fact = 1.0;
    for (int n = 0; n < 10; ++n) {
        if (n > 0) fact *= n;
        const double expect = std::exp(-x) * std::pow(x, n) / fact;
        CHECK(std::abs(std::norm(displacement_matrix_element(n, 0, beta)) - expect) < 1e-14);
    }
}

TEST_CASE("exact eigenstates: energy and residual in the Fock basis") {
    EbParams p;
    p.coupling = 1.3;
    p.omega = 0.9;
    p.fock = 60;
    const OperatorMatrix h = build_hamiltonian_fock(p);
    const double e_shift = -p.coupling * p.coupling / (2.0 * p.omega * p.omega);
    for (const Branch b : {Branch::Left, Branch::Right})
        for (int n = 0; n < 3; ++n) {
            const DisplacedState ds = exact_eigenstate({b, n}, p);
            REQUIRE(ds.converged);
            const Vector v = ds.state.amplitudes;
            const double e = (v.adjoint() * h.entries * v)(0).real();
            CHECK(std::abs(e - (p.omega * n + e_shift)) < 1e-8);
            CHECK((h.entries * v - e * v).norm() < 1e-6);
        }
}

TEST_CASE("well overlap matches the displaced ground-state inner product") {
    EbParams p;
    p.coupling = 1.1;
    p.omega = 1.2;
    p.fock = 80;
    const double expect =
        std::exp(-p.coupling * p.coupling / (p.omega * p.omega * p.omega));
    CHECK(std::abs(well_overlap(p) - expect) < 1e-14);
    // numeric oracle: inner product of the two branches' oscillator profiles
    // (the branches carry opposite spin, so compare the oscillator blocks)
    const int d = p.fock + 1;
    const Vector l = exact_eigenstate({Branch::Left, 0}, p).state.amplitudes;
    const Vector r = exact_eigenstate({Branch::Right, 0}, p).state.amplitudes;
    Complex osc = 0;
    for (int n = 0; n < d; ++n) osc += std::conj(l(d + n)) * r(n);
    CHECK(std::abs(std::abs(osc) - expect) < 1e-10);
}

TEST_CASE("Fock and displaced-basis spectra agree") {
    for (const double field : {0.0, 0.7, 2.0})
        for (const double coupling : {0.6, 1.5}) {
            EbParams p;
            p.coupling = coupling;
            p.omega = 1.0;
            p.field = field;
            p.fock = 60;
            const auto ef = lowest_k(build_hamiltonian_fock(p), 10);
            const auto ed = lowest_k(build_hamiltonian_displaced(p), 10);
            for (int i = 0; i < 10; ++i) CHECK(std::abs(ef[i] - ed[i]) < 1e-6);
        }
}

TEST_CASE("field-free spectrum is two-fold degenerate") {
    EbParams p;
    p.coupling = 1.0;
    p.fock = 50;
    const auto e = lowest_k(build_hamiltonian_fock(p), 6);
    for (int i = 0; i < 6; i += 2) {
        CHECK(std::abs(e[i] - e[i + 1]) < 1e-10);
        CHECK(std::abs(e[i] - (p.omega * (i / 2) - 0.5)) < 1e-8);
    }
}

TEST_CASE("closed-form reduced density against the partial-trace oracle") {
    EbParams p;
    p.coupling = 0.9;
    p.omega = 1.1;
    p.fock = 60;
    for (int ic = 0; ic <= 10; ++ic)
        for (const double gamma : {0.0, 0.7, 2.5, -1.2}) {
            const double c1 = ic / 10.0;
            const DensityMatrix closed = reduced_qubit_density_delta0(c1, gamma, p);
            const PureState s = ground_superposition(c1, gamma, p);
            CHECK(std::abs(s.norm() - 1.0) < 1e-12);
            const DensityMatrix numeric = reduced_density(s, {0});
            CHECK((closed.entries - numeric.entries).cwiseAbs().maxCoeff() < 1e-9);
        }
}

TEST_CASE("superposition entropy: endpoints, maximum, coupling dependence") {
    EbParams p;
    p.omega = 1.0;
    p.fock = 60;
    p.coupling = 1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(von_neumann_entropy(reduced_qubit_density_delta0(0.0, 0.3, p)) < 1e-12);
    CHECK(von_neumann_entropy(reduced_qubit_density_delta0(1.0, 0.3, p)) < 1e-12);
    const double s_mid = von_neumann_entropy(reduced_qubit_density_delta0(inv_sqrt2, 0.0, p));
    for (const double c1 : {0.2, 0.5, 0.9})
        CHECK(s_mid >= von_neumann_entropy(reduced_qubit_density_delta0(c1, 0.0, p)));
    // entanglement grows with coupling as the wells separate
    double prev = -1.0;
    for (const double coupling : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        p.coupling = coupling;
        const double s = von_neumann_entropy(reduced_qubit_density_delta0(inv_sqrt2, 0.0, p));
        CHECK(s > prev);
        prev = s;
    }
    CHECK(prev <= 1.0 + 1e-12);
}

TEST_CASE("ground state with transverse field: convergence loop") {
    EbParams p;
    p.coupling = 1.0;
    p.field = 0.5;
    p.fock = 10;
    const EbGround g = converged_ground(p);
    CHECK(g.converged);
    CHECK(g.fock >= 10);
    // energy must sit below the field-free manifold (level repulsion)
    CHECK(g.energy < -0.5);
    const double s = ground_entropy(g);
    CHECK(s > 0.0);
    CHECK(s < 1.0);
}

TEST_CASE("deep strong coupling keeps the cat gauge (near-unit entropy)") {
    EbParams p;
    p.coupling = 8.0;
    p.field = 1.0;
    p.fock = 160;
    const EbGround g = ground_state_at(p);
    CHECK(ground_entropy(g) > 0.999);
    // and moderate coupling is handled by the generic branch
    p.coupling = 2.0;
    p.fock = 60;
    CHECK(ground_entropy(ground_state_at(p)) > 0.9);
}

TEST_CASE("parameter validation") {
    EbParams p;
    p.omega = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.omega = 1.0;
    p.coupling = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
