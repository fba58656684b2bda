#ifndef SQMC_CLASSICAL_HPP
#define SQMC_CLASSICAL_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sqmc/graph.hpp"

namespace sqmc {

// Classical spin configuration: one unit 3-vector per vertex.
using UnitVectorAssignment = std::vector<Eigen::Vector3d>;

// (1/2) sum_e w_e omega_i . omega_j
double cha_energy(const WeightedGraph& g, const UnitVectorAssignment& omegas);

// (1/2) sum_e w_e (1 - omega_i . omega_j) = total_weight - cha_energy
double product_objective(const WeightedGraph& g, const UnitVectorAssignment& omegas);

struct LocalSearchOptions {
  int max_sweeps = 10000;
  double sweep_tol = 1e-12;  // absolute objective gain per full sweep
};

struct LocalSearchResult {
  double value = 0.0;
  UnitVectorAssignment omegas;
  int sweeps = 0;
};

// Coordinate-descent product-state search: each site is replaced by the unit
// vector opposing its weighted neighborhood sum, which never lowers the
// objective. Sites whose neighborhood sum vanishes keep their current vector.
// Best value over `restarts` independent seeded starts.
LocalSearchResult prod_local_search(const WeightedGraph& g, int restarts,
                                    std::uint64_t seed,
                                    const LocalSearchOptions& opts = {});

struct BruteForceOptions {
  double tolerance = 1e-3;  // certified absolute gap at return
  int restarts = 64;
  std::uint64_t seed = 48271;
};

// Certified global maximum of the product objective over (S^2)^N, N <= 6.
// A rank-3 incumbent is certified against a Lagrangian dual upper bound of
// the unit-diagonal relaxation, which is exact at this size because the
// relaxation always admits a rank <= 3 optimizer for N <= 9. Throws if the
// certificate gap exceeds `tolerance`.
double prod_brute_force(const WeightedGraph& g, const BruteForceOptions& opts = {});

}  // namespace sqmc

#endif  // SQMC_CLASSICAL_HPP
