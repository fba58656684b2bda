#include <doctest.h>

#include <algorithm>

#include "sqmc/classical.hpp"
#include "sqmc/exact.hpp"
#include "sqmc/rng.hpp"

using namespace sqmc;

namespace {

// Dense full-spectrum oracle, independent of extreme_eigenvalue's paths.
Eigen::VectorXd dense_spectrum(const SparseOperator& op) {
  REQUIRE(op.rows() <= 4096);
  const MatrixXc dense(op);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(dense);
  return es.eigenvalues();
}

}  // namespace

TEST_CASE("single weight-2 edge reproduces 2 + 1/S") {
  const auto g0 = WeightedGraph::single_edge(2.0);
  for (int two_s : {1, 2, 3}) {
    const Spin s(two_s);
    const double expected = 2.0 + 1.0 / s.s();
    CHECK(qmaxcut_value(g0, s) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(qha_value(g0, s) ==
          doctest::Approx(g0.total_weight() - expected).epsilon(1e-10));
  }
  // S = 1/2: explicit values 4 and -3.
  CHECK(qmaxcut_value(g0, Spin(1)) == doctest::Approx(4.0));
  CHECK(qha_value(g0, Spin(1)) == doctest::Approx(-3.0));
}

TEST_CASE("two-site antiferromagnet spectrum at S = 1/2") {
  const auto g0 = WeightedGraph::single_edge(2.0);
  const auto h = build_qha_hamiltonian(g0, Spin(1));
  const Eigen::VectorXd eig = dense_spectrum(h);
  REQUIRE(eig.size() == 4);
  CHECK(eig[0] == doctest::Approx(-3.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(eig[i] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single unit edge ground energy is -(S+1)/(2S)") {
  const auto g = WeightedGraph::single_edge(1.0);
  for (int two_s : {1, 2, 3, 4}) {
    const Spin s(two_s);
    CHECK(qha_value(g, s) ==
          doctest::Approx(-(s.s() + 1.0) / (2.0 * s.s())).epsilon(1e-10));
  }
}

TEST_CASE("unit triangle at S = 1/2") {
  const auto k3 = WeightedGraph::complete(3, 1.0);
  const Spin half(1);
  const auto h = build_qmc_hamiltonian(k3, half);
  REQUIRE(h.rows() == 8);
  const Eigen::VectorXd eig = dense_spectrum(h);
  CHECK(eig[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eig[eig.size() - 1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(qmaxcut_value(k3, half) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(qha_value(k3, half) == doctest::Approx(-1.5).epsilon(1e-10));
}

TEST_CASE("edgeless graphs cost nothing") {
  const WeightedGraph lone(3, {});
  CHECK(qmaxcut_value(lone, Spin(2)) == 0.0);
  CHECK(qha_value(lone, Spin(2)) == 0.0);
  const auto h = build_qmc_hamiltonian(lone, Spin(1));
  CHECK(MatrixXc(h).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("extreme eigenvalue of an explicit diagonal operator") {
  SparseOperator d(3, 3);
  d.insert(0, 0) = 1.0;
  d.insert(1, 1) = 2.0;
  d.insert(2, 2) = 3.0;
  CHECK(extreme_eigenvalue(d, Extreme::Largest).value == doctest::Approx(3.0));
  CHECK(extreme_eigenvalue(d, Extreme::Smallest).value == doctest::Approx(1.0));
}

TEST_CASE("lanczos agrees with the dense decomposition at dimension 1024") {
  const auto g = WeightedGraph::random(10, 0.5, 1.0, 42);
  const Spin half(1);
  const auto h = build_qmc_hamiltonian(g, half);
  REQUIRE(h.rows() == 1024);

  ExactOptions lanczos;
  lanczos.dense_cutoff = 1;
  const SpectralResult fast = extreme_eigenvalue(h, Extreme::Largest, lanczos);

  const Eigen::VectorXd eig = dense_spectrum(h);
  CHECK(std::abs(fast.value - eig[eig.size() - 1]) < 1e-8);
  CHECK(fast.residual <= 1e-8 * std::max(1.0, std::abs(fast.value)));

  // Same seed, same answer bit for bit.
  const SpectralResult again = extreme_eigenvalue(h, Extreme::Largest, lanczos);
  CHECK(fast.value == again.value);
}

TEST_CASE("qmc hamiltonians are positive semidefinite") {
  for (int i = 0; i < 20; ++i) {
    const auto g = WeightedGraph::random(3 + i % 3, 0.6, 1.0, 1000 + i);
    const Spin s(1 + i % 2);
    const auto h = build_qmc_hamiltonian(g, s);
    CHECK(extreme_eigenvalue(h, Extreme::Smallest).value >= -1e-9);
    CHECK(is_hermitian(h, 1e-12));
  }
}

TEST_CASE("complement identity on random instances") {
  for (int i = 0; i < 10; ++i) {
    const auto g = WeightedGraph::random(4 + i % 3, 0.7, 2.0, 2000 + i);
    const Spin s(1 + i % 3);
    CHECK(std::abs(qmaxcut_value(g, s) - (g.total_weight() - qha_value(g, s))) <
          1e-9);
  }
}

TEST_CASE("antiferromagnet commutes with total Sz") {
  const auto g = WeightedGraph::random(4, 0.8, 1.0, 5);
  const Spin s(2);
  const auto h = build_qha_hamiltonian(g, s);
  const SpinTriple t = spin_matrices(s);
  SparseOperator sz_total(h.rows(), h.cols());
  for (int v = 0; v < g.vertex_count(); ++v)
    sz_total += site_operator(t.sz, v, g.vertex_count());
  const SparseOperator comm =
      SparseOperator(h * sz_total) - SparseOperator(sz_total * h);
  double worst = 0.0;
  for (int k = 0; k < comm.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(comm, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  CHECK(worst < 1e-10);
}

TEST_CASE("product states never beat the exact optimum") {
  auto gen = rng::make_stream(777);
  for (int i = 0; i < 5; ++i) {
    const auto g = WeightedGraph::random(4, 0.7, 1.0, 3000 + i);
    const Spin s(1 + i % 2);
    const auto h = build_qmc_hamiltonian(g, s);
    const double qmc = qmaxcut_value(g, s);
    for (int t = 0; t < 5; ++t) {
      UnitVectorAssignment omegas(g.vertex_count());
      for (auto& o : omegas) o = rng::random_unit3(gen);
      CHECK(expectation(h, product_coherent_state(s, omegas)) <= qmc + 1e-9);
    }
  }
}

TEST_CASE("size cap reporting") {
  const auto g = WeightedGraph::complete(8, 1.0);
  ExactOptions tiny;
  tiny.dim_cap = 100;
  CHECK_THROWS_AS(build_qmc_hamiltonian(g, Spin(1), tiny), SizeCapError);
  CHECK(!exactly_solvable(Spin(1), 8, tiny));
  CHECK(exactly_solvable(Spin(1), 8));
}
