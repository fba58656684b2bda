#include "sqmc/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqmc {

namespace {

constexpr int kSite1 = 0, kSite2 = 1, kSiteA = 2, kSiteB = 3;

SparseOperator pair_coupling(Spin s, int site_u, int site_v) {
  const SpinTriple t = spin_matrices(s);
  const std::int64_t dim = many_body_dim(s, 4);
  SparseOperator op(dim, dim);
  for (int axis = 0; axis < 3; ++axis) {
    const SparseOperator a = site_operator(t.component(axis), site_u, 4);
    const SparseOperator b = site_operator(t.component(axis), site_v, 4);
    op += SparseOperator(a * b);
  }
  return op;
}

// S_1.S_2 on two sites only, used for the effective fit and the pair kernel.
MatrixXc two_site_heisenberg(Spin s) {
  const SpinTriple t = spin_matrices(s);
  const int d = s.dim();
  MatrixXc k = MatrixXc::Zero(d * d, d * d);
  for (int axis = 0; axis < 3; ++axis) {
    const MatrixXc& a = t.component(axis);
    for (int r1 = 0; r1 < d; ++r1)
      for (int c1 = 0; c1 < d; ++c1)
        for (int r2 = 0; r2 < d; ++r2)
          for (int c2 = 0; c2 < d; ++c2)
            k(r1 * d + r2, c1 * d + c2) += a(r1, c1) * a(r2, c2);
  }
  return k;
}

MatrixXc pair_h0_matrix(Spin s) {
  const int d2 = s.dim() * s.dim();
  return 2.0 * two_site_heisenberg(s) +
         2.0 * s.casimir() * MatrixXc::Identity(d2, d2);
}

// Isometry from the d^2 logical space (sites 1,2) into d^4, tensoring on the
// mediator kernel state. Site-major layout puts the mediator pair on the
// fast indices.
MatrixXc kernel_isometry(Spin s) {
  const int d2 = s.dim() * s.dim();
  const VectorXc psi0 = mediator_ground_state(s);
  MatrixXc v = MatrixXc::Zero(static_cast<Eigen::Index>(d2) * d2, d2);
  for (int slow = 0; slow < d2; ++slow)
    v.block(static_cast<Eigen::Index>(slow) * d2, slow, d2, 1) = psi0;
  return v;
}

}  // namespace

SparseOperator gadget_h0(Spin s) {
  const std::int64_t dim = many_body_dim(s, 4);
  SparseOperator id(dim, dim);
  id.setIdentity();
  SparseOperator h = SparseOperator(2.0 * pair_coupling(s, kSiteA, kSiteB));
  h += SparseOperator(2.0 * s.casimir() * id);
  return h;
}

SparseOperator gadget_h2(Spin s) {
  SparseOperator h = pair_coupling(s, kSite1, kSiteA);
  h += pair_coupling(s, kSite2, kSiteA);
  return h;
}

double gadget_h1_coefficient(Spin s) {
  const double ss1 = s.casimir();
  return 2.0 * ss1 * ss1 / (3.0 * (s.two_s + 1.0));
}

VectorXc mediator_ground_state(Spin s) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(pair_h0_matrix(s));
  if (es.eigenvalues()[0] > 1e-9 || es.eigenvalues()[1] < 1e-9)
    throw std::runtime_error("mediator pair kernel is not one-dimensional");
  VectorXc psi = es.eigenvectors().col(0);
  int imax = 0;
  for (int i = 1; i < psi.size(); ++i)
    if (std::abs(psi[i]) > std::abs(psi[imax])) imax = i;
  psi *= std::conj(psi[imax]) / std::abs(psi[imax]);
  return psi / psi.norm();
}

EffectiveResult effective_hamiltonian(Spin s, bool include_h1) {
  const int d2 = s.dim() * s.dim();

  // Pseudo-inverse of the pair H0: invert away from the kernel only.
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(pair_h0_matrix(s));
  MatrixXc pinv = MatrixXc::Zero(d2, d2);
  for (int i = 0; i < d2; ++i) {
    const double lambda = es.eigenvalues()[i];
    if (lambda > 1e-9)
      pinv += (1.0 / lambda) * es.eigenvectors().col(i) *
              es.eigenvectors().col(i).adjoint();
  }

  const MatrixXc h2 = MatrixXc(gadget_h2(s));
  const MatrixXc v = kernel_isometry(s);
  const MatrixXc a = h2 * v;  // d^4 x d^2

  // (I tensor pinv) applied blockwise over the slow (site 1,2) index.
  MatrixXc b = a;
  for (int slow = 0; slow < d2; ++slow)
    b.middleRows(static_cast<Eigen::Index>(slow) * d2, d2) =
        pinv * a.middleRows(static_cast<Eigen::Index>(slow) * d2, d2);

  MatrixXc m = -(a.adjoint() * b);
  if (include_h1)
    m += gadget_h1_coefficient(s) * MatrixXc::Identity(d2, d2);

  // Least-squares fit m ~ -c K + e I over real (c, e).
  const MatrixXc k = two_site_heisenberg(s);
  const double kk = k.cwiseAbs2().sum();
  const double ki = k.trace().real();
  const double ii = d2;
  const double mk = (k.adjoint() * m).trace().real();
  const double mi = m.trace().real();
  // Normal equations for min ||m + cK - eI||_F^2.
  const double det = kk * ii - ki * ki;
  const double c = (-mk * ii + mi * ki) / det;
  const double e = (mi * kk - mk * ki) / det;

  EffectiveResult out;
  out.matrix = m;
  out.fit.coupling = c;
  out.fit.offset = e;
  out.fit.residual = (m - (-c * k + e * MatrixXc::Identity(d2, d2))).norm();
  return out;
}

double gadget_ph2p_norm(Spin s) {
  const MatrixXc v = kernel_isometry(s);
  const MatrixXc restricted = v.adjoint() * MatrixXc(gadget_h2(s)) * v;
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(restricted);
  double norm = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    norm = std::max(norm, std::abs(es.eigenvalues()[i]));
  return norm;
}

Eigen::Matrix3d mediator_correlation(Spin s) {
  const SpinTriple t = spin_matrices(s);
  const VectorXc psi0 = mediator_ground_state(s);
  const int d = s.dim();
  Eigen::Matrix3d corr;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // S^i on a (slow), S^j on b (fast) within the pair space.
      const MatrixXc& si = t.component(i);
      const MatrixXc& sj = t.component(j);
      Complex val = 0.0;
      for (int ra = 0; ra < d; ++ra)
        for (int ca = 0; ca < d; ++ca)
          for (int rb = 0; rb < d; ++rb)
            for (int cb = 0; cb < d; ++cb)
              val += std::conj(psi0[ra * d + rb]) * si(ra, ca) * sj(rb, cb) *
                     psi0[ca * d + cb];
      corr(i, j) = val.real();
    }
  }
  return corr;
}

std::vector<ConvergenceRow> spectral_convergence(Spin s, const std::vector<double>& deltas,
                                                 bool include_h1) {
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] <= 0.0) throw std::invalid_argument("deltas must be positive");
    if (i > 0 && deltas[i] <= deltas[i - 1])
      throw std::invalid_argument("deltas must be increasing");
  }
  const int d2 = s.dim() * s.dim();
  const EffectiveResult eff = effective_hamiltonian(s, include_h1);
  Eigen::SelfAdjointEigenSolver<MatrixXc> eff_es(eff.matrix);
  const Eigen::VectorXd target = eff_es.eigenvalues();

  const MatrixXc h0 = MatrixXc(gadget_h0(s));
  const MatrixXc h2 = MatrixXc(gadget_h2(s));
  const MatrixXc id = MatrixXc::Identity(h0.rows(), h0.cols());

  std::vector<ConvergenceRow> rows;
  for (const double delta : deltas) {
    MatrixXc h = delta * h0 + std::sqrt(delta) * h2;
    if (include_h1) h += gadget_h1_coefficient(s) * id;
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
    double err = 0.0;
    for (int i = 0; i < d2; ++i)
      err = std::max(err, std::abs(es.eigenvalues()[i] - target[i]));
    rows.push_back({delta, err, err * std::sqrt(delta)});
  }
  return rows;
}

}  // namespace sqmc
