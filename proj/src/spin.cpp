#include "sqmc/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace sqmc {

SpinTriple spin_matrices(Spin s) {
  const int d = s.dim();
  const double sval = s.s();
  MatrixXc sp = MatrixXc::Zero(d, d);  // raising operator S+
  MatrixXc sz = MatrixXc::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = sval - k;  // basis index k holds |m = S - k>
    sz(k, k) = m;
    if (k > 0) {
      // <m+1|S+|m> with m = sval - k
      sp(k - 1, k) = std::sqrt(s.casimir() - m * (m + 1.0));
    }
  }
  const MatrixXc sm = sp.adjoint();
  SpinTriple t;
  t.sx = 0.5 * (sp + sm);
  t.sy = Complex(0.0, -0.5) * (sp - sm);
  t.sz = sz;
  return t;
}

VectorXc coherent_state(Spin s, const Eigen::Vector3d& omega) {
  if (std::abs(omega.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("coherent_state: direction must be a unit vector");
  const SpinTriple t = spin_matrices(s);
  const MatrixXc h = omega.x() * t.sx + omega.y() * t.sy + omega.z() * t.sz;
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
  VectorXc psi = es.eigenvectors().col(s.dim() - 1);  // eigenvalue +S

  int imax = 0;
  for (int i = 1; i < psi.size(); ++i)
    if (std::abs(psi[i]) > std::abs(psi[imax])) imax = i;
  const Complex a = psi[imax];
  psi *= std::conj(a) / std::abs(a);
  return psi / psi.norm();
}

std::int64_t many_body_dim(Spin s, int n_sites) {
  std::int64_t dim = 1;
  for (int i = 0; i < n_sites; ++i) {
    if (dim > (std::int64_t(1) << 62) / s.dim())
      throw std::overflow_error("many-body dimension overflows 64 bits");
    dim *= s.dim();
  }
  return dim;
}

SparseOperator site_operator(const MatrixXc& a, int site, int n_sites) {
  if (a.rows() != a.cols()) throw std::invalid_argument("site operator must be square");
  if (site < 0 || site >= n_sites)
    throw std::out_of_range("site index " + std::to_string(site) + " out of range");
  const std::int64_t d = a.rows();
  std::int64_t pre = 1, post = 1;
  for (int i = 0; i < site; ++i) pre *= d;
  for (int i = site + 1; i < n_sites; ++i) post *= d;
  const std::int64_t dim = pre * d * post;

  std::vector<Eigen::Triplet<Complex>> trips;
  for (std::int64_t r = 0; r < d; ++r) {
    for (std::int64_t c = 0; c < d; ++c) {
      const Complex v = a(r, c);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::int64_t p = 0; p < pre; ++p) {
        const std::int64_t row_base = (p * d + r) * post;
        const std::int64_t col_base = (p * d + c) * post;
        for (std::int64_t q = 0; q < post; ++q)
          trips.emplace_back(row_base + q, col_base + q, v);
      }
    }
  }
  SparseOperator op(dim, dim);
  op.setFromTriplets(trips.begin(), trips.end());
  return op;
}

VectorXc product_coherent_state(Spin s, const std::vector<Eigen::Vector3d>& omegas) {
  if (omegas.empty()) throw std::invalid_argument("need at least one site");
  VectorXc out = coherent_state(s, omegas[0]);
  for (std::size_t i = 1; i < omegas.size(); ++i) {
    const VectorXc site = coherent_state(s, omegas[i]);
    VectorXc next(out.size() * site.size());
    for (Eigen::Index p = 0; p < out.size(); ++p)
      next.segment(p * site.size(), site.size()) = out[p] * site;
    out.swap(next);
  }
  return out;
}

bool is_hermitian(const SparseOperator& op, double tol) {
  if (op.rows() != op.cols()) return false;
  SparseOperator diff = SparseOperator(op.adjoint()) - op;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(diff, k); it; ++it)
      if (std::abs(it.value()) > tol) return false;
  return true;
}

}  // namespace sqmc
