#ifndef SQMC_ROUNDING_HPP
#define SQMC_ROUNDING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sqmc/classical.hpp"
#include "sqmc/graph.hpp"
#include "sqmc/sdp.hpp"
#include "sqmc/spin.hpp"

namespace sqmc {

// Projects the Gram vectors through a random 3-by-k Gaussian matrix and
// normalizes, yielding one unit 3-vector per vertex. The whole matrix is
// resampled in the measure-zero event that some image nearly vanishes.
UnitVectorAssignment gaussian_round(const GramVectors& gram, std::uint64_t seed);

struct OverlapEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long trials = 0;
};

// Monte-Carlo estimate of E[omega_i . omega_j] for two vectors at inner
// product rho, one independent Gaussian projection per trial.
OverlapEstimate estimate_overlap_mean(double rho, long trials, std::uint64_t seed);

struct RoundingReport {
  long trials = 0;
  double best_value = 0.0;
  double mean_value = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  UnitVectorAssignment best_assignment;
  std::vector<double> edge_overlap_mean;  // aligned with g.edges()
};

// Rounds `trials` independent projections and evaluates the product
// objective for each; per-trial RNG substreams keep the reduction
// deterministic for a fixed seed.
RoundingReport round_and_evaluate(const WeightedGraph& g, const GramVectors& gram,
                                  long trials, std::uint64_t seed);

enum class Algorithm { LiebBov, GpS };

struct PipelineResult {
  double value = 0.0;  // best over trials
  UnitVectorAssignment assignment;
  double mean_value = 0.0;
  double std_error = 0.0;
  double sdp_value = 0.0;
  std::optional<double> qmaxcut;
  std::optional<double> ratio_vs_exact;  // best / qmaxcut
  std::uint64_t seed = 0;
};

// Full solve -> round -> best-of-T pipeline. LiebBov rounds the c = 1
// relaxation, GpS the c = (S+1)/S one. When the instance fits the exact
// solver, the realized ratio against the true optimum is attached.
PipelineResult end_to_end(const WeightedGraph& g, Spin s, Algorithm algorithm,
                          long trials, std::uint64_t seed,
                          const SdpOptions& sdp_opts = {},
                          const ExactOptions& exact_opts = {});

}  // namespace sqmc

#endif  // SQMC_ROUNDING_HPP
