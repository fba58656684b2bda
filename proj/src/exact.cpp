#include "sqmc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sqmc/rng.hpp"

namespace sqmc {

namespace {

std::int64_t checked_dim(const WeightedGraph& g, Spin s, const ExactOptions& opts) {
  const std::int64_t dim = many_body_dim(s, g.vertex_count());
  if (dim > opts.dim_cap)
    throw SizeCapError("many-body dimension " + std::to_string(dim) +
                       " exceeds cap " + std::to_string(opts.dim_cap));
  return dim;
}

// sum_e w_e S_i.S_j, assembled edge by edge from embedded site operators so
// sparse fill-in stays bounded.
SparseOperator heisenberg_sum(const WeightedGraph& g, Spin s, std::int64_t dim) {
  const SpinTriple t = spin_matrices(s);
  const int n = g.vertex_count();
  SparseOperator h(dim, dim);
  for (const auto& e : g.edges()) {
    if (e.w == 0.0) continue;
    for (int axis = 0; axis < 3; ++axis) {
      const SparseOperator a = site_operator(t.component(axis), e.u, n);
      const SparseOperator b = site_operator(t.component(axis), e.v, n);
      h += (e.w * (a * b)).pruned();
    }
  }
  return h;
}

SparseOperator scaled_identity(std::int64_t dim, double value) {
  SparseOperator id(dim, dim);
  id.setIdentity();
  return SparseOperator(value * id);
}

SpectralResult dense_extreme(const SparseOperator& h, Extreme which) {
  const MatrixXc dense = MatrixXc(h);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(dense);
  const Eigen::Index idx = which == Extreme::Largest ? dense.rows() - 1 : 0;
  SpectralResult r;
  r.value = es.eigenvalues()[idx];
  r.vector = es.eigenvectors().col(idx);
  r.residual = (h * r.vector - r.value * r.vector).norm();
  return r;
}

// Restarted Lanczos with full reorthogonalization. Deterministic for a fixed
// seed; restarts from the current Ritz vector until the residual certificate
// is met.
SpectralResult lanczos_extreme(const SparseOperator& h, Extreme which,
                               const ExactOptions& opts) {
  const Eigen::Index n = h.rows();
  auto gen = rng::make_stream(opts.lanczos_seed);
  rng::NormalSampler normal(gen);
  VectorXc v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(normal(), normal());
  v /= v.norm();

  const int m = std::min<std::int64_t>(opts.lanczos_block, n);
  int matvecs = 0;
  SpectralResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < opts.lanczos_max_restarts; ++restart) {
    std::vector<VectorXc> basis;
    basis.reserve(m + 1);
    basis.push_back(v);
    Eigen::VectorXd alpha(m), beta(m);
    int k = 0;
    bool invariant = false;
    for (; k < m; ++k) {
      VectorXc w = h * basis[k];
      ++matvecs;
      alpha[k] = basis[k].dot(w).real();
      w -= alpha[k] * basis[k];
      if (k > 0) w -= beta[k - 1] * basis[k - 1];
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : basis) w -= u.dot(w) * u;
      beta[k] = w.norm();
      if (beta[k] < 1e-13 * std::max(1.0, std::abs(alpha[k]))) {
        invariant = true;
        ++k;
        break;
      }
      basis.push_back(w / beta[k]);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(alpha.head(k), beta.head(std::max(0, k - 1)));
    const Eigen::Index idx = which == Extreme::Largest ? k - 1 : 0;
    const double theta = tri.eigenvalues()[idx];
    VectorXc x = VectorXc::Zero(n);
    for (int i = 0; i < k; ++i) x += tri.eigenvectors()(i, idx) * basis[i];
    x /= x.norm();

    const double res = (h * x - theta * x).norm();
    ++matvecs;
    if (res < best.residual) {
      best.value = theta;
      best.vector = x;
      best.residual = res;
    }
    if (best.residual <= opts.tol * std::max(1.0, std::abs(best.value)) || invariant) {
      best.matvecs = matvecs;
      return best;
    }
    v = x;
  }
  throw ConvergenceError("Lanczos failed to converge; attained residual " +
                         std::to_string(best.residual));
}

}  // namespace

SparseOperator build_qmc_hamiltonian(const WeightedGraph& g, Spin s,
                                     const ExactOptions& opts) {
  const std::int64_t dim = checked_dim(g, s, opts);
  const double inv = 1.0 / (2.0 * s.s() * s.s());
  SparseOperator h = scaled_identity(dim, g.total_weight());
  h -= SparseOperator(inv * heisenberg_sum(g, s, dim));
  return h;
}

SparseOperator build_qha_hamiltonian(const WeightedGraph& g, Spin s,
                                     const ExactOptions& opts) {
  const std::int64_t dim = checked_dim(g, s, opts);
  const double inv = 1.0 / (2.0 * s.s() * s.s());
  return SparseOperator(inv * heisenberg_sum(g, s, dim));
}

SpectralResult extreme_eigenvalue(const SparseOperator& h, Extreme which,
                                  const ExactOptions& opts) {
  if (h.rows() < 1) throw std::invalid_argument("empty operator");
  if (h.rows() <= opts.dense_cutoff) return dense_extreme(h, which);
  return lanczos_extreme(h, which, opts);
}

double qmaxcut_value(const WeightedGraph& g, Spin s, const ExactOptions& opts) {
  if (g.empty()) return 0.0;
  return extreme_eigenvalue(build_qmc_hamiltonian(g, s, opts), Extreme::Largest, opts).value;
}

double qha_value(const WeightedGraph& g, Spin s, const ExactOptions& opts) {
  if (g.empty()) return 0.0;
  return extreme_eigenvalue(build_qha_hamiltonian(g, s, opts), Extreme::Smallest, opts).value;
}

double expectation(const SparseOperator& h, const VectorXc& psi) {
  return psi.dot(h * psi).real();
}

}  // namespace sqmc
