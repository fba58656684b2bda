#ifndef SQMC_SPIN_HPP
#define SQMC_SPIN_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace sqmc {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

// Hermitian operator on the d^N many-body space.
using SparseOperator = Eigen::SparseMatrix<Complex>;

// Spin magnitude stored exactly as the integer 2S, so half-integer spins
// never touch floating point in dimension arithmetic.
struct Spin {
  int two_s;

  explicit Spin(int two_s_) : two_s(two_s_) {
    if (two_s < 1) throw std::invalid_argument("spin needs 2S >= 1");
  }
  int dim() const { return two_s + 1; }
  double s() const { return 0.5 * two_s; }
  double casimir() const { return s() * (s() + 1.0); }  // S(S+1)
};

// (S+1)/S, the objective coefficient of the spin-S relaxation; tends to 1
// in the classical limit.
inline double spin_coefficient(Spin s) { return (s.s() + 1.0) / s.s(); }

// The three d-by-d Hermitian generators for one site, standard basis
// ordering m = S, S-1, ..., -S (sz diagonal, descending).
struct SpinTriple {
  MatrixXc sx, sy, sz;

  const MatrixXc& component(int axis) const {
    switch (axis) {
      case 0: return sx;
      case 1: return sy;
      default: return sz;
    }
  }
};

SpinTriple spin_matrices(Spin s);

// Highest-weight eigenstate of S.omega (the Bloch coherent state along
// omega); satisfies <S> = S*omega. Phase fixed by making the largest
// amplitude real positive so results reproduce across runs.
VectorXc coherent_state(Spin s, const Eigen::Vector3d& omega);

// Embeds a single-site operator at `site` of an n-site chain, identity on
// the rest. Site-major Kronecker layout, site 0 slowest.
SparseOperator site_operator(const MatrixXc& a, int site, int n_sites);

VectorXc product_coherent_state(Spin s, const std::vector<Eigen::Vector3d>& omegas);

std::int64_t many_body_dim(Spin s, int n_sites);

bool is_hermitian(const SparseOperator& op, double tol = 1e-12);

}  // namespace sqmc

#endif  // SQMC_SPIN_HPP
