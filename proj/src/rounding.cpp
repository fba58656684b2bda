#include "sqmc/rounding.hpp"

#include <cmath>

#include "sqmc/rng.hpp"

namespace sqmc {

namespace {

UnitVectorAssignment project_with(const Eigen::MatrixXd& y, std::mt19937_64& gen) {
  const int k = static_cast<int>(y.rows());
  const int n = static_cast<int>(y.cols());
  rng::NormalSampler normal(gen);
  UnitVectorAssignment omegas(n);
  for (;;) {
    Eigen::MatrixXd z(3, k);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < k; ++c) z(r, c) = normal();
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector3d image = z * y.col(i);
      const double norm = image.norm();
      if (norm < 1e-14) {
        ok = false;
        break;
      }
      omegas[i] = image / norm;
    }
    if (ok) return omegas;
  }
}

// Streaming mean / variance (Welford).
struct Accumulator {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  double std_error() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / (n - 1.0) / n);
  }
};

}  // namespace

UnitVectorAssignment gaussian_round(const GramVectors& gram, std::uint64_t seed) {
  if (gram.size() < 1) throw std::invalid_argument("empty Gram vectors");
  auto gen = rng::make_stream(seed, 0);
  return project_with(gram.y, gen);
}

OverlapEstimate estimate_overlap_mean(double rho, long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need trials >= 1");
  if (std::abs(rho) > 1.0) throw std::invalid_argument("rho must lie in [-1, 1]");
  Eigen::MatrixXd y(2, 2);
  y.col(0) << 1.0, 0.0;
  y.col(1) << rho, std::sqrt(std::max(0.0, 1.0 - rho * rho));

  Accumulator acc;
  for (long t = 0; t < trials; ++t) {
    auto gen = rng::make_stream(seed, static_cast<std::uint64_t>(t));
    const auto omegas = project_with(y, gen);
    acc.add(omegas[0].dot(omegas[1]));
  }
  return {acc.mean, acc.std_error(), trials};
}

RoundingReport round_and_evaluate(const WeightedGraph& g, const GramVectors& gram,
                                  long trials, std::uint64_t seed) {
  if (gram.size() != g.vertex_count())
    throw std::invalid_argument("Gram vectors do not match the graph");
  if (trials < 1) throw std::invalid_argument("need trials >= 1");

  RoundingReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.best_value = -std::numeric_limits<double>::infinity();

  Accumulator value_acc;
  std::vector<double> overlap_sum(g.edges().size(), 0.0);

  for (long t = 0; t < trials; ++t) {
    auto gen = rng::make_stream(seed, static_cast<std::uint64_t>(t));
    const auto omegas = project_with(gram.y, gen);
    const double value = product_objective(g, omegas);
    value_acc.add(value);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto& edge = g.edges()[e];
      overlap_sum[e] += omegas[edge.u].dot(omegas[edge.v]);
    }
    if (value > rep.best_value) {
      rep.best_value = value;
      rep.best_assignment = omegas;
    }
  }

  rep.mean_value = value_acc.mean;
  rep.std_error = value_acc.std_error();
  rep.edge_overlap_mean.resize(overlap_sum.size());
  for (std::size_t e = 0; e < overlap_sum.size(); ++e)
    rep.edge_overlap_mean[e] = overlap_sum[e] / trials;
  return rep;
}

PipelineResult end_to_end(const WeightedGraph& g, Spin s, Algorithm algorithm,
                          long trials, std::uint64_t seed, const SdpOptions& sdp_opts,
                          const ExactOptions& exact_opts) {
  const double c = algorithm == Algorithm::GpS ? spin_coefficient(s) : 1.0;
  const SdpSolution sdp = solve_sdp(g, c, sdp_opts);
  const RoundingReport rounding = round_and_evaluate(g, sdp.gram, trials, seed);

  PipelineResult out;
  out.value = rounding.best_value;
  out.assignment = rounding.best_assignment;
  out.mean_value = rounding.mean_value;
  out.std_error = rounding.std_error;
  out.sdp_value = sdp.value;
  out.seed = seed;

  if (exactly_solvable(s, g.vertex_count(), exact_opts)) {
    const double exact = qmaxcut_value(g, s, exact_opts);
    out.qmaxcut = exact;
    if (exact > 0.0) out.ratio_vs_exact = rounding.best_value / exact;
  }
  return out;
}

}  // namespace sqmc
