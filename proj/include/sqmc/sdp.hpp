#ifndef SQMC_SDP_HPP
#define SQMC_SDP_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "sqmc/exact.hpp"
#include "sqmc/graph.hpp"
#include "sqmc/spin.hpp"

namespace sqmc {

// Feasible point of the unit-diagonal SDP in Gram-vector form: column i of
// `y` is a unit vector in R^k, so the Gram matrix y^T y is PSD with ones on
// the diagonal by construction.
struct GramVectors {
  Eigen::MatrixXd y;  // k x N, unit columns
  double c = 1.0;     // objective coefficient: 1 for Max-Cut, (S+1)/S for spin S

  int size() const { return static_cast<int>(y.cols()); }
  int rank() const { return static_cast<int>(y.rows()); }
  Eigen::MatrixXd gram() const { return y.transpose() * y; }
};

struct SdpOptions {
  int rank = 0;  // 0: min(N, ceil(sqrt(2N)) + 1)
  int restarts = 8;
  int max_sweeps = 100000;
  double residual_tol = 1e-9;  // stationarity target per restart
  std::uint64_t seed = 2718;
};

struct SdpSolution {
  GramVectors gram;
  double value = 0.0;
  // max_i ||y_i + normalize(sum_j w_ij y_j)|| over vertices with a nonzero
  // neighborhood sum; zero at a blockwise-optimal point.
  double stationarity_residual = 0.0;
  bool certified = false;
  int sweeps = 0;
  // most negative per-sweep objective change seen (ascent check)
  double min_sweep_gain = 0.0;
};

// Maximizes (1/2) sum_e w_e (1 - c y_i.y_j) over unit vectors by cyclic
// block-coordinate ascent (mixing method). The block update is independent
// of c > 0, so one solver serves both relaxations.
SdpSolution solve_sdp(const WeightedGraph& g, double c, const SdpOptions& opts = {});

double sdp_value_mc(const WeightedGraph& g, const SdpOptions& opts = {});
double sdp_value_s(const WeightedGraph& g, Spin s, const SdpOptions& opts = {});

struct RelaxationReport {
  double sdp_s = 0.0;
  double qmaxcut = 0.0;
  double moment_diag_error = 0.0;  // max_i |M_ii - S(S+1)| for M = S(S+1) rho
  bool holds = false;
};

// Checks the relaxation direction SDP_S >= QMaxCut_S on an exactly solvable
// instance, and that the reconstructed moment matrix has the right diagonal.
RelaxationReport verify_relaxation(const WeightedGraph& g, Spin s,
                                   const SdpOptions& sdp_opts = {},
                                   const ExactOptions& exact_opts = {});

}  // namespace sqmc

#endif  // SQMC_SDP_HPP
