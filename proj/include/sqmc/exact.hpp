#ifndef SQMC_EXACT_HPP
#define SQMC_EXACT_HPP

#include <cstdint>
#include <stdexcept>

#include "sqmc/graph.hpp"
#include "sqmc/spin.hpp"

namespace sqmc {

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactOptions {
  // Hard cap on the many-body dimension d^N.
  std::int64_t dim_cap = std::int64_t(1) << 21;
  // Below this dimension the extreme eigenpair comes from a full dense
  // eigendecomposition; above it, restarted Lanczos with full
  // reorthogonalization.
  std::int64_t dense_cutoff = 512;
  std::uint64_t lanczos_seed = 1234;
  int lanczos_block = 48;
  int lanczos_max_restarts = 400;
  double tol = 1e-11;  // residual target, relative to max(1,|value|)
};

enum class Extreme { Largest, Smallest };

struct SpectralResult {
  double value = 0.0;
  VectorXc vector;
  double residual = 0.0;  // ||H v - value v||
  int matvecs = 0;
};

// (1/2) sum_e w_e (1 - S_i.S_j / S^2); positive semidefinite.
SparseOperator build_qmc_hamiltonian(const WeightedGraph& g, Spin s,
                                     const ExactOptions& opts = {});

// (1/(2 S^2)) sum_e w_e S_i.S_j; equals W*Id minus the operator above.
SparseOperator build_qha_hamiltonian(const WeightedGraph& g, Spin s,
                                     const ExactOptions& opts = {});

SpectralResult extreme_eigenvalue(const SparseOperator& h, Extreme which,
                                  const ExactOptions& opts = {});

double qmaxcut_value(const WeightedGraph& g, Spin s, const ExactOptions& opts = {});
double qha_value(const WeightedGraph& g, Spin s, const ExactOptions& opts = {});

inline bool exactly_solvable(Spin s, int n_sites, const ExactOptions& opts = {}) {
  std::int64_t dim = 1;
  for (int i = 0; i < n_sites; ++i) {
    dim *= s.dim();
    if (dim > opts.dim_cap) return false;
  }
  return true;
}

// <psi|H|psi> for a normalized state.
double expectation(const SparseOperator& h, const VectorXc& psi);

}  // namespace sqmc

#endif  // SQMC_EXACT_HPP
