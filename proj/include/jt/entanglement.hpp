#pragma once

#include "jt/ee_model.hpp"
#include "jt/types.hpp"

namespace jt {

/// Binary Shannon entropy H(x) = -x log2 x - (1-x) log2 (1-x).
double binary_entropy(double x);

/// S = -Tr rho log2 rho in bits. Eigenvalues below -positivity tolerance
/// are rejected; small negative rounding noise is clipped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit density matrix:
/// C = max{0, l1 - l2 - l3 - l4} with l_i the decreasing square roots of the
/// eigenvalues of rho (sy x sy) rho^* (sy x sy).
double concurrence(const DensityMatrix& rho);

/// S = H((1 + sqrt(1 - tau))/2) for tangle tau = C^2.
double tangle_to_entropy(double tau);

/// Difference between the qubit<->both-oscillators entropy and the
/// qubit<->angular-qubit entropy (via the concurrence/tangle route) for a
/// two-mode ground state.
double entanglement_gap(const PureState& s, const EeParams& p);

}  // namespace jt
