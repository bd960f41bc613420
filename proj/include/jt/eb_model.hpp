#pragma once

#include "jt/linalg.hpp"

namespace jt {

/// Qubit + one oscillator. Units: hbar = m = 1. Basis index 0 = spin down,
/// so the coupling operator on the qubit is sigma_theta = diag(-1, 1) and the
/// Right displaced branch (well at +coupling/omega^2) carries spin down.
struct EbParams {
    double coupling = 1.0;  // L
    double omega = 1.0;
    double field = 0.0;     // Delta, transverse
    int fock = 40;          // Fock states 0..fock per mode

    void validate() const {
        if (omega <= 0) throw std::invalid_argument("omega must be positive");
        if (fock < 1) throw std::invalid_argument("fock truncation must be >= 1");
        if (coupling < 0 || field < 0)
            throw std::invalid_argument("coupling and field must be nonnegative");
    }
};

enum class Branch { Left, Right };

struct DisplacedBasisLabel {
    Branch branch;
    int n = 0;
};

/// H = field*sigma_x (x) I + (coupling/sqrt(2 omega)) sigma_z (x) (a+a^dag)
///     + omega I (x) a^dag a, dimension 2(fock+1), factors (2, fock+1).
OperatorMatrix build_hamiltonian_fock(const EbParams& p);

/// <m|D(beta)|n> with D(beta) = exp(beta a^dag - beta^* a); prefactors in
/// log-magnitude form so large m, n do not overflow.
Complex displacement_matrix_element(int m, int n, Complex beta);

/// Full (fock+1)^2 table of <m|D(beta)|n>.
Matrix displacement_matrix(int fock, Complex beta);

/// Dimensionless displacement amplitude for a position shift dq:
/// beta = sqrt(omega/2) dq.
inline double displacement_for_shift(double dq, double omega) {
    return std::sqrt(omega / 2.0) * dq;
}

struct DisplacedState {
    PureState state;
    double truncation_loss = 0.0;  // norm^2 lost at the Fock cutoff
    bool converged = true;         // truncation_loss <= 1e-8
};

/// |psi_n^{L,R}> expanded in the qubit (x) Fock basis. Exact eigenstate of
/// the field-free Hamiltonian; any parameters accepted for construction.
DisplacedState exact_eigenstate(const DisplacedBasisLabel& label, const EbParams& p);

/// Hamiltonian in the displaced-Fock basis: diagonal energies
/// omega n - coupling^2/(2 omega^2) on both branches, off-diagonal blocks
/// field * <m|D(+-beta_rel)|n> with beta_rel the inter-well displacement.
OperatorMatrix build_hamiltonian_displaced(const EbParams& p);

/// c1 |psi_0^L> + sqrt(1-c1^2) e^{i gamma} |psi_0^R>, field-free ground manifold.
PureState ground_superposition(double c1, double gamma, const EbParams& p);

/// Closed-form 2x2 reduced qubit density of the above superposition:
/// diag(c2^2, c1^2) with (down,up) entry c1 c2 S e^{+i gamma},
/// S = exp(-coupling^2/omega^3) the displaced-well overlap.
DensityMatrix reduced_qubit_density_delta0(double c1, double gamma, const EbParams& p);

/// Overlap of the two displaced ground wavefunctions.
double well_overlap(const EbParams& p);

struct EbGround {
    PureState state;
    double energy = 0.0;
    double gap = 0.0;   // E1 - E0 as reported by the eigensolver
    int fock = 0;
    bool converged = true;
};

/// Numerical ground state at the given truncation. For near-degenerate
/// lowest pairs the state is gauge-fixed by the projected transverse field,
/// falling back to the parity symmetry sigma_x (x) (-1)^n when the field
/// matrix element underflows.
EbGround ground_state_at(const EbParams& p);

/// Doubling convergence loop on ground energy and qubit entropy; truncation
/// growth capped by fock_max (or env JT_FOCK_MAX).
EbGround converged_ground(EbParams p, int fock_max = 0);

}  // namespace jt
