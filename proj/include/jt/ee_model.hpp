#pragma once

#include "jt/linalg.hpp"

namespace jt {

/// Qubit + two degenerate oscillator modes (theta, epsilon). Factor order is
/// (qubit, theta mode, epsilon mode); basis index 0 = spin down.
struct EeParams {
    double coupling = 1.0;  // L
    double omega = 1.0;
    double field = 0.0;     // Delta, along the varpi axis
    int fock = 30;          // Fock states 0..fock per mode

    void validate() const {
        if (omega <= 0) throw std::invalid_argument("omega must be positive");
        if (fock < 1) throw std::invalid_argument("fock truncation must be >= 1");
        if (coupling < 0 || field < 0)
            throw std::invalid_argument("coupling and field must be nonnegative");
    }
};

/// H = omega (a^dag a + b^dag b + 1) + (L/(2 sqrt 2)) [(a+a^dag) sigma_theta
///     + (b+b^dag) sigma_epsilon] + Delta sigma_varpi, dimension 2(fock+1)^2.
OperatorMatrix build_hamiltonian_two_mode(const EeParams& p);

/// L_varpi = i(a b^dag - a^dag b) embedded with identity on the qubit.
OperatorMatrix angular_momentum_w(const EeParams& p);

struct ConservedJ {
    OperatorMatrix j;          // L_varpi + spin_factor * sigma_varpi
    double spin_factor = 0.5;
    double residual_half = 0.0;  // interior ||[J,H]||/||H|| for s = 1/2
    double residual_one = 0.0;   // same for s = 1
    bool tie = false;            // both candidates commute (L = 0)
};

/// Selects the spin factor in J = L_varpi + s sigma_varpi by minimizing the
/// interior-block commutator with the Hamiltonian.
ConservedJ conserved_j_w(const EeParams& p);

/// Max |[a,b]| entry restricted to rows/columns with total occupation <=
/// max_total, divided by max |a| entry. Operators must share the
/// (2, fock+1, fock+1) factor layout.
double interior_commutator(const OperatorMatrix& a, const OperatorMatrix& b, int max_total);

struct SymmetryBlock {
    double j_value = 0.0;
    std::vector<Index> indices;  // columns of `basis` in the full-space ordering
    OperatorMatrix block;
    Matrix basis;                // full_dim x block_dim, orthonormal columns
};

/// Simultaneous block structure of h via the eigenspaces of j (eigenvalues
/// clustered within 1e-6). Inputs failing the interior commutator bound are
/// rejected with both residuals reported.
std::vector<SymmetryBlock> block_decompose(const OperatorMatrix& h, const OperatorMatrix& j);

struct GroundPair {
    PureState psi;       // member with positive-imaginary qubit coherence
    PureState psi_conj;  // its complex conjugate in the Fock basis
    double energy = 0.0;
    double pair_gap = 0.0;  // energy split of the two members (truncation)
    double gap = 0.0;       // distance to the next level above the pair
    double j_psi = 0.0;     // conserved-quantity eigenvalue of psi
    int fock = 0;
    bool converged = true;
};

/// Degenerate ground pair at field = 0, solved block-by-block in the
/// circular (angular momentum) basis; gauge fixed by the sign of the
/// conserved quantity with psi_conj = conj(psi).
GroundPair ground_pair_at(const EeParams& p);

/// Doubling truncation loop around ground_pair_at.
GroundPair converged_ground_pair(EeParams p, int fock_max = 0);

/// c1 psi + sqrt(1-c1^2) e^{i gamma} psi_conj, normalized.
PureState pair_superposition(const GroundPair& pair, double c1, double gamma);

struct EeGround {
    PureState state;
    double energy = 0.0;
    double gap = 0.0;
    int fock = 0;
    bool converged = true;
};

/// Nondegenerate ground state for field > 0 (blocked solve).
EeGround ground_state_at(const EeParams& p);
EeGround converged_ground(EeParams p, int fock_max = 0);

struct AngularReduction {
    DensityMatrix two_qubit;        // (spin) x (angular m in {0,1}) qubits
    double weight = 0.0;            // norm^2 captured by the m in {0,1} projection
    std::vector<double> m_weights;  // occupation of each |m|<=fock sector, index m+fock
};

/// Projects the state onto the m = 0, 1 angular momentum sectors and traces
/// the radial coordinate, yielding a two-qubit density (spin first). Refuses
/// with the m spectrum when the projected weight drops below 1/2.
AngularReduction angular_qubit_reduction(const PureState& s, const EeParams& p);

}  // namespace jt
