#include "sqmc/sdp.hpp"

#include <cmath>
#include <limits>

#include "sqmc/rng.hpp"

namespace sqmc {

namespace {

int auto_rank(int n) {
  const int bm = static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 1;
  return std::min(n, bm);
}

double objective(const WeightedGraph& g, double c, const Eigen::MatrixXd& y) {
  double gram_energy = 0.0;
  for (const auto& e : g.edges()) gram_energy += e.w * y.col(e.u).dot(y.col(e.v));
  return g.total_weight() - 0.5 * c * gram_energy;
}

}  // namespace

SdpSolution solve_sdp(const WeightedGraph& g, double c, const SdpOptions& opts) {
  if (!(c > 0.0)) throw std::invalid_argument("objective coefficient must be positive");
  const int n = g.vertex_count();
  const int k = opts.rank > 0 ? opts.rank : auto_rank(n);
  if (k < 1) throw std::invalid_argument("rank must be >= 1");
  const auto adj = g.adjacency();

  SdpSolution best;
  best.value = -std::numeric_limits<double>::infinity();

  for (int r = 0; r < opts.restarts; ++r) {
    auto gen = rng::make_stream(opts.seed, static_cast<std::uint64_t>(r));
    Eigen::MatrixXd y(k, n);
    for (int i = 0; i < n; ++i) y.col(i) = rng::random_unit_vector(k, gen);

    auto stationarity = [&]() {
      double res = 0.0;
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd field = Eigen::VectorXd::Zero(k);
        for (const auto& [j, w] : adj[i]) field += w * y.col(j);
        const double norm = field.norm();
        if (norm > 0.0) res = std::max(res, (y.col(i) + field / norm).norm());
      }
      return res;
    };

    double value = objective(g, c, y);
    double min_gain = 0.0;
    double residual = stationarity();
    int sweep = 0;
    bool converged = residual <= opts.residual_tol;
    for (; sweep < opts.max_sweeps && !converged; ++sweep) {
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd field = Eigen::VectorXd::Zero(k);
        for (const auto& [j, w] : adj[i]) field += w * y.col(j);
        const double norm = field.norm();
        if (norm > 0.0) y.col(i) = -field / norm;
      }
      const double next = objective(g, c, y);
      min_gain = std::min(min_gain, next - value);
      value = next;
      residual = stationarity();
      converged = residual <= opts.residual_tol;
    }

    if (value > best.value) {
      best.gram = GramVectors{y, c};
      best.value = value;
      best.stationarity_residual = residual;
      best.certified = converged && residual <= 1e-8;
      best.sweeps = sweep;
      best.min_sweep_gain = min_gain;
    }
  }
  return best;
}

double sdp_value_mc(const WeightedGraph& g, const SdpOptions& opts) {
  return solve_sdp(g, 1.0, opts).value;
}

double sdp_value_s(const WeightedGraph& g, Spin s, const SdpOptions& opts) {
  return solve_sdp(g, spin_coefficient(s), opts).value;
}

RelaxationReport verify_relaxation(const WeightedGraph& g, Spin s,
                                   const SdpOptions& sdp_opts,
                                   const ExactOptions& exact_opts) {
  RelaxationReport rep;
  const SdpSolution sol = solve_sdp(g, spin_coefficient(s), sdp_opts);
  rep.sdp_s = sol.value;
  rep.qmaxcut = qmaxcut_value(g, s, exact_opts);

  const Eigen::MatrixXd moment = s.casimir() * sol.gram.gram();
  for (int i = 0; i < moment.rows(); ++i)
    rep.moment_diag_error =
        std::max(rep.moment_diag_error, std::abs(moment(i, i) - s.casimir()));

  rep.holds = rep.sdp_s >= rep.qmaxcut - 1e-7;
  return rep;
}

}  // namespace sqmc
