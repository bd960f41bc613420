#pragma once

#include "jt/types.hpp"

namespace jt {

// --- elementary operators ------------------------------------------------

/// sigma_theta = diag(-1, 1); basis index 0 = spin down.
Matrix pauli_theta();
/// sigma_epsilon = [[0,1],[1,0]]  (= sigma_x).
Matrix pauli_epsilon();
/// sigma_varpi = [[0,i],[-i,0]].
Matrix pauli_varpi();
Matrix pauli_y();

/// Truncated annihilation operator on Fock states 0..fock.
Matrix annihilation(Index fock);
Matrix number_operator(Index fock);

// --- core operations -----------------------------------------------------

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

struct EigPair {
    double value;
    PureState vector;
};

/// Lowest-k eigenpairs of a verified Hermitian operator, ascending.
std::vector<EigPair> hermitian_eig(const OperatorMatrix& a, Index k);

/// Full decomposition; eigenvalues ascending, columns of the matrix are
/// the corresponding orthonormal eigenvectors.
std::pair<Eigen::VectorXd, Matrix> full_hermitian_eig(const OperatorMatrix& a);

/// Partial trace keeping the listed factors (0-based, ascending output order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

DensityMatrix density_of(const PureState& s);

/// Reduced density of a pure state over the kept factors; avoids forming
/// the full outer product.
DensityMatrix reduced_density(const PureState& s, const std::vector<int>& keep);

}  // namespace jt
