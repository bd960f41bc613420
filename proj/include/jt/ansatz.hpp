#pragma once

#include "jt/types.hpp"

namespace jt {

/// Closed-form trial ground state of the two-mode model in polar oscillator
/// coordinates q_theta = q cos(phi), q_epsilon = q sin(phi):
///   <q,phi|Psi> ~ A(q,phi)|down> - i B(q,phi)|up>
/// with A, B Gaussian-hyperbolic profiles of argument q*kappa.
struct AnsatzParams {
    double coupling = 1.0;  // L
    double omega = 1.0;

    double kappa() const { return coupling / (2.0 * omega); }

    void validate() const {
        if (omega <= 0) throw std::invalid_argument("omega must be positive");
        if (coupling < 0) throw std::invalid_argument("coupling must be nonnegative");
    }
};

struct SuperpositionSpec {
    double c1 = 1.0;
    double gamma = 0.0;

    double c2() const { return std::sqrt(std::max(0.0, 1.0 - c1 * c1)); }

    void validate() const {
        if (c1 < 0 || c1 > 1) throw std::invalid_argument("c1 must lie in [0, 1]");
    }
};

/// A(q,phi) = e^{-q^2/2}(cosh(q kappa) + e^{i phi} sinh(q kappa)).
Complex amplitude_A(double q, double phi, const AnsatzParams& p);
/// B(q,phi) = e^{-q^2/2}(cosh(q kappa) - e^{i phi} sinh(q kappa)).
Complex amplitude_B(double q, double phi, const AnsatzParams& p);

/// N^2 = pi e^{-2 kappa^2} [1 + e^{kappa^2} kappa sqrt(pi) Erf(kappa)].
double normalization(const AnsatzParams& p);

/// C = [1 + e^{kappa^2} kappa sqrt(pi) Erf(kappa)]^{-1}; in (0,1], strictly
/// decreasing in kappa.
double coherence_factor(const AnsatzParams& p);

/// Reduced qubit density of |Psi>: (1/2) [[1, iC], [-iC, 1]].
DensityMatrix single_state_density(const AnsatzParams& p);

/// Reduced qubit density of c1|Psi> + c2 e^{i gamma}|Psi*>; eigenvalues are
/// (1 +- sqrt(1 - Gamma))/2 with Gamma from superposition_gamma().
DensityMatrix superposition_density(const SuperpositionSpec& s, const AnsatzParams& p);

/// Gamma = 1 - c1^2 c2^2 (1+C)^2 - (c1^2 - c2^2)^2 C^2.
double superposition_gamma(const SuperpositionSpec& s, const AnsatzParams& p);

/// Fidelity of the two-qubit (spin x angular) reduction of |Psi> with the
/// Bell form (|-> |0>_phi + |+> |1>_phi)/sqrt(2); equals 1/2 at kappa = 0 and
/// approaches 1 at strong coupling. Computed by radial quadrature.
double bell_overlap(const AnsatzParams& p);

struct BellCheckReport {
    double kappa = 0.0;
    double overlap = 0.0;
    bool passed = false;  // overlap >= 0.99
};

/// Strong-coupling check (requires kappa >= 3).
BellCheckReport large_coupling_bell_check(const AnsatzParams& p);

}  // namespace jt
