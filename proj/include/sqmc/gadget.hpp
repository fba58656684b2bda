#ifndef SQMC_GADGET_HPP
#define SQMC_GADGET_HPP

#include <vector>

#include "sqmc/spin.hpp"

namespace sqmc {

// Mediator construction on four sites ordered (1, 2, a, b): a strongly
// penalized pair (a, b) whose virtual excitations induce a ferromagnetic
// coupling between sites 1 and 2 at second order.

// H0 = ||S_a + S_b||^2 embedded in d^4; PSD with a one-dimensional kernel on
// the mediator pair.
SparseOperator gadget_h0(Spin s);

// H2 = (S_1 + S_2) . S_a embedded in d^4.
SparseOperator gadget_h2(Spin s);

// Identity coefficient that cancels the induced constant shift.
double gadget_h1_coefficient(Spin s);

// The pair-space (d^2) kernel state of ||S_a + S_b||^2, found numerically.
VectorXc mediator_ground_state(Spin s);

struct EffectiveFit {
  double coupling = 0.0;  // c in  -c S_1.S_2 + e Id
  double offset = 0.0;    // e
  double residual = 0.0;  // Frobenius norm of the fit remainder
};

struct EffectiveResult {
  MatrixXc matrix;  // d^2 x d^2, on sites 1 and 2
  EffectiveFit fit;
};

// Second-order effective Hamiltonian P H1 P - P H2 pinv(H0) H2 P restricted
// to the kernel factor, with the pseudo-inverse taken on the orthogonal
// complement of the kernel. Least-squares fit against the Heisenberg-plus-
// identity form.
EffectiveResult effective_hamiltonian(Spin s, bool include_h1 = false);

// Spectral norm of the kernel-restricted H2 (must vanish: the mediator
// ground state carries no magnetization).
double gadget_ph2p_norm(Spin s);

// C_ij = Re <Psi0| S_a^i S_b^j |Psi0> on the mediator pair.
Eigen::Matrix3d mediator_correlation(Spin s);

struct ConvergenceRow {
  double delta = 0.0;
  double error = 0.0;         // max |low eigenvalue - effective eigenvalue|
  double scaled_error = 0.0;  // error * sqrt(delta)
};

// Diagonalizes Delta H0 + sqrt(Delta) H2 for each Delta and compares the
// lowest d^2 eigenvalues against the effective spectrum.
std::vector<ConvergenceRow> spectral_convergence(Spin s, const std::vector<double>& deltas,
                                                 bool include_h1 = false);

}  // namespace sqmc

#endif  // SQMC_GADGET_HPP
