#include "sqmc/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>

#include "sqmc/classical.hpp"
#include "sqmc/exact.hpp"
#include "sqmc/gadget.hpp"
#include "sqmc/graph.hpp"
#include "sqmc/ratios.hpp"
#include "sqmc/rng.hpp"
#include "sqmc/rounding.hpp"
#include "sqmc/sdp.hpp"
#include "sqmc/spin.hpp"

namespace sqmc {

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

// Small seeded instance family shared by the checks below.
WeightedGraph test_instance(std::uint64_t seed, int index, int max_n = 6) {
  const int n = 3 + index % (max_n - 2);
  const double p = 0.45 + 0.1 * (index % 4);
  return WeightedGraph::random(n, p, 1.0, rng::mix(seed) + index);
}

double max_abs_entry(const SparseOperator& op) {
  double m = 0.0;
  for (int k = 0; k < op.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(op, k); it; ++it)
      m = std::max(m, std::abs(it.value()));
  return m;
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& opts) : opts_(opts) {}

  void check(const std::string& name, bool pass, const std::string& detail) {
    results_.push_back({name, pass, detail});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

  const VerifyOptions& opts() const { return opts_; }

 private:
  VerifyOptions opts_;
  std::vector<CheckResult> results_;
};

void check_graph(Suite& s) {
  bool roundtrip = true;
  for (int i = 0; i < 20 && roundtrip; ++i) {
    const auto g = test_instance(s.opts().seed, i, 8);
    roundtrip = (WeightedGraph::parse(g.render()) == g);
  }
  s.check("graph.roundtrip", roundtrip, "parse(render(G)) == G on 20 random instances");

  const auto a = test_instance(s.opts().seed, 3, 5);
  const auto b = test_instance(s.opts().seed, 7, 5);
  std::vector<Edge> merged = a.edges();
  for (auto e : b.edges())
    merged.push_back({e.u + a.vertex_count(), e.v + a.vertex_count(), e.w});
  const WeightedGraph u(a.vertex_count() + b.vertex_count(), merged);
  const double err = std::abs(u.total_weight() - a.total_weight() - b.total_weight());
  s.check("graph.total_weight_additive", err <= 1e-12,
          fmt("disjoint union weight mismatch %.3g", err));
}

void check_spin(Suite& s) {
  double worst_comm = 0.0, worst_cas = 0.0, worst_herm = 0.0;
  double worst_coherent = 0.0, worst_bound = 0.0, worst_equality = 0.0;
  for (int two_s = 1; two_s <= 8; ++two_s) {
    const Spin spin(two_s);
    const SpinTriple t = spin_matrices(spin);
    const MatrixXc* comp[3] = {&t.sx, &t.sy, &t.sz};
    const int d = spin.dim();
    for (int a = 0; a < 3; ++a) {
      worst_herm = std::max(worst_herm,
                            (*comp[a] - comp[a]->adjoint()).cwiseAbs().maxCoeff());
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      const MatrixXc comm = (*comp[a]) * (*comp[b]) - (*comp[b]) * (*comp[a]) -
                            Complex(0, 1) * (*comp[c]);
      worst_comm = std::max(worst_comm, comm.cwiseAbs().maxCoeff());
    }
    const MatrixXc cas = t.sx * t.sx + t.sy * t.sy + t.sz * t.sz -
                         spin.casimir() * MatrixXc::Identity(d, d);
    worst_cas = std::max(worst_cas, cas.cwiseAbs().maxCoeff());

    auto gen = rng::make_stream(s.opts().seed, 100 + two_s);
    rng::NormalSampler normal(gen);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Vector3d omega = rng::random_unit3(gen);
      const VectorXc psi = coherent_state(spin, omega);
      Eigen::Vector3d exp_s;
      for (int a = 0; a < 3; ++a) exp_s[a] = psi.dot(*comp[a] * psi).real();
      worst_coherent = std::max(worst_coherent, (exp_s - spin.s() * omega).norm());
      worst_equality = std::max(worst_equality, std::abs(exp_s.norm() / spin.s() - 1.0));

      VectorXc random_state(d);
      for (int i = 0; i < d; ++i) random_state[i] = Complex(normal(), normal());
      random_state /= random_state.norm();
      Eigen::Vector3d m;
      for (int a = 0; a < 3; ++a) m[a] = random_state.dot(*comp[a] * random_state).real();
      worst_bound = std::max(worst_bound, m.norm() / spin.s() - 1.0);
    }
  }
  s.check("spin.hermitian", worst_herm <= 1e-12, fmt("max deviation %.3g", worst_herm));
  s.check("spin.commutation", worst_comm <= 1e-10, fmt("max deviation %.3g", worst_comm));
  s.check("spin.casimir", worst_cas <= 1e-10, fmt("max deviation %.3g", worst_cas));
  s.check("spin.coherent_defining", worst_coherent <= 1e-10,
          fmt("max |<S> - S Omega| = %.3g over 100 directions x 8 spins", worst_coherent));
  s.check("spin.magnetization_bound", worst_bound <= 1e-12,
          fmt("max ||<S>||/S - 1 = %.3g over random states", worst_bound));
  s.check("spin.coherent_saturation", worst_equality <= 1e-10,
          fmt("max | ||<S>||/S - 1 | = %.3g for coherent states", worst_equality));
}

void check_exact(Suite& s) {
  double worst_psd = 0.0, worst_comp = 0.0, worst_comm = 0.0, worst_var = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto g = test_instance(s.opts().seed, i, 4);
    const Spin spin(1 + i % 2);
    const auto h = build_qmc_hamiltonian(g, spin);
    const double lo = extreme_eigenvalue(h, Extreme::Smallest).value;
    worst_psd = std::max(worst_psd, -lo);
  }
  s.check("exact.psd", worst_psd <= 1e-9,
          fmt("most negative ground energy %.3g over 20 instances", worst_psd));

  for (int i = 0; i < 10; ++i) {
    const auto g = test_instance(s.opts().seed, i, 5);
    const Spin spin(1 + i % 3);
    const double qmc = qmaxcut_value(g, spin);
    const double qha = qha_value(g, spin);
    worst_comp = std::max(worst_comp, std::abs(qmc - (g.total_weight() - qha)));

    if (!g.empty()) {
      const auto h = build_qha_hamiltonian(g, spin);
      const SpinTriple t = spin_matrices(spin);
      SparseOperator sz_total(h.rows(), h.cols());
      for (int v = 0; v < g.vertex_count(); ++v)
        sz_total += site_operator(t.sz, v, g.vertex_count());
      worst_comm = std::max(
          max_abs_entry(SparseOperator(h * sz_total) - SparseOperator(sz_total * h)),
          worst_comm);
    }

    const auto hq = build_qmc_hamiltonian(g, spin);
    auto gen = rng::make_stream(s.opts().seed, 500 + i);
    for (int t = 0; t < 5; ++t) {
      UnitVectorAssignment omegas(g.vertex_count());
      for (auto& o : omegas) o = rng::random_unit3(gen);
      const double energy = expectation(hq, product_coherent_state(spin, omegas));
      worst_var = std::max(worst_var, energy - qmc);
    }
  }
  s.check("exact.complement", worst_comp <= 1e-9,
          fmt("max |QMC - (W - QHA)| = %.3g", worst_comp));
  s.check("exact.su2_symmetry", worst_comm <= 1e-10,
          fmt("max |[H, total Sz]| entry = %.3g", worst_comm));
  s.check("exact.variational", worst_var <= 1e-9,
          fmt("max product-state excess over QMaxCut = %.3g", worst_var));

  // Lanczos against the dense decomposition on a 2^9 dimension instance.
  const auto g = WeightedGraph::random(9, 0.5, 1.0, rng::mix(s.opts().seed) + 77);
  const Spin half(1);
  const auto h = build_qmc_hamiltonian(g, half);
  ExactOptions force_dense;
  force_dense.dense_cutoff = 1 << 12;
  ExactOptions force_lanczos;
  force_lanczos.dense_cutoff = 1;
  const double dense = extreme_eigenvalue(h, Extreme::Largest, force_dense).value;
  const double lanczos = extreme_eigenvalue(h, Extreme::Largest, force_lanczos).value;
  s.check("exact.lanczos_vs_dense", std::abs(dense - lanczos) <= 1e-8,
          fmt("dense %.12g vs lanczos %.12g", dense, lanczos));
}

void check_classical(Suite& s) {
  // Single-site replacements never lower the objective.
  bool monotone = true;
  double worst_drop = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto g = test_instance(s.opts().seed, i, 6);
    const auto adj = g.adjacency();
    auto gen = rng::make_stream(s.opts().seed, 900 + i);
    UnitVectorAssignment omegas(g.vertex_count());
    for (auto& o : omegas) o = rng::random_unit3(gen);
    double value = product_objective(g, omegas);
    for (int sweep = 0; sweep < 20; ++sweep) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        Eigen::Vector3d field = Eigen::Vector3d::Zero();
        for (const auto& [j, w] : adj[v]) field += w * omegas[j];
        if (field.norm() > 0.0) omegas[v] = -field.normalized();
        const double next = product_objective(g, omegas);
        worst_drop = std::min(worst_drop, next - value);
        if (next < value - 1e-12) monotone = false;
        value = next;
      }
    }
  }
  s.check("classical.sweep_monotone", monotone,
          fmt("worst per-replacement change %.3g", worst_drop));

  // Interior (ball) starts never beat the sphere-constrained search.
  double worst_excess = -1.0;
  for (int i = 0; i < 6; ++i) {
    const auto g = test_instance(s.opts().seed, i, 4);
    const auto adj = g.adjacency();
    const double sphere_best = prod_local_search(g, 32, s.opts().seed + i).value;
    auto gen = rng::make_stream(s.opts().seed, 1300 + i);
    double ball_best = -1e300;
    for (int r = 0; r < 16; ++r) {
      UnitVectorAssignment u(g.vertex_count());
      for (auto& o : u) o = rng::uniform01(gen) * rng::random_unit3(gen);
      for (int sweep = 0; sweep < 200; ++sweep) {
        for (int v = 0; v < g.vertex_count(); ++v) {
          Eigen::Vector3d field = Eigen::Vector3d::Zero();
          for (const auto& [j, w] : adj[v]) field += w * u[j];
          if (field.norm() > 0.0) u[v] = -field.normalized();
        }
      }
      ball_best = std::max(ball_best, product_objective(g, u));
    }
    worst_excess = std::max(worst_excess, ball_best - sphere_best);
  }
  s.check("classical.ball_reduction", worst_excess <= 1e-9,
          fmt("max ball-start excess over sphere search %.3g", worst_excess));

  // Lieb chain and the product-state sandwich on jointly solvable instances.
  double chain_slack = 0.0, sandwich_slack = 0.0;
  for (int i = 0; i < 8; ++i) {
    const auto g = test_instance(s.opts().seed, i, 6);
    const Spin spin(1 + i % 3);
    const double w = g.total_weight();
    const double prod = prod_local_search(g, 32, s.opts().seed + 40 + i).value;
    const double cha = w - prod;
    const double qha = qha_value(g, spin);
    const double qmc = qmaxcut_value(g, spin);
    const double stretch = (spin.s() + 1.0) / spin.s();
    chain_slack = std::max(chain_slack, stretch * stretch * cha - qha);
    chain_slack = std::max(chain_slack, qha - cha);
    const double shrink = spin.s() / (spin.s() + 1.0);
    sandwich_slack = std::max(sandwich_slack, shrink * shrink * qmc - prod);
    sandwich_slack = std::max(sandwich_slack, prod - qmc);
  }
  s.check("classical.lieb_chain", chain_slack <= 1e-7,
          fmt("max chain violation %.3g", chain_slack));
  s.check("classical.sandwich", sandwich_slack <= 1e-9,
          fmt("max sandwich violation %.3g", sandwich_slack));

  // Local search matches the certified brute force on small instances.
  double worst_gap = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto g = test_instance(s.opts().seed, i, 4);
    const double local = prod_local_search(g, 32, s.opts().seed + 60 + i).value;
    const double brute = prod_brute_force(g);
    worst_gap = std::max(worst_gap, std::abs(local - brute));
  }
  s.check("classical.brute_force_agrees", worst_gap <= 2e-3,
          fmt("max |local - brute| = %.3g", worst_gap));
}

void check_sdp(Suite& s) {
  double worst_norm = 0.0, worst_gain = 0.0, worst_resid = 0.0;
  double worst_affine = 0.0, worst_rank = 0.0, worst_relax = 0.0, worst_diag = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto g = test_instance(s.opts().seed, i, 8);
    const Spin spin(1 + i % 3);
    const double c = spin_coefficient(spin);
    SdpOptions opts;
    opts.seed = s.opts().seed + i;
    const SdpSolution mc = solve_sdp(g, 1.0, opts);
    const SdpSolution ss = solve_sdp(g, c, opts);
    for (const SdpSolution* sol : {&mc, &ss}) {
      for (int v = 0; v < sol->gram.size(); ++v)
        worst_norm = std::max(worst_norm, std::abs(sol->gram.y.col(v).norm() - 1.0));
      worst_gain = std::max(worst_gain, -sol->min_sweep_gain);
      if (!g.empty()) worst_resid = std::max(worst_resid, sol->stationarity_residual);
    }
    const double predicted = (1.0 - c) * g.total_weight() + c * mc.value;
    worst_affine = std::max(
        worst_affine, std::abs(ss.value - predicted) / std::max(1.0, std::abs(ss.value)));

    if (i < 6) {
      SdpOptions full = opts;
      full.rank = g.vertex_count();
      const double vfull = solve_sdp(g, c, full).value;
      worst_rank = std::max(worst_rank,
                            std::abs(ss.value - vfull) / std::max(1.0, std::abs(vfull)));
    }
    if (i < 8 && exactly_solvable(spin, g.vertex_count())) {
      const auto rep = verify_relaxation(g, spin, opts);
      worst_relax = std::max(worst_relax, rep.qmaxcut - rep.sdp_s);
      worst_diag = std::max(worst_diag, rep.moment_diag_error);
    }
  }
  s.check("sdp.feasibility", worst_norm <= 1e-10, fmt("max | ||y||-1 | = %.3g", worst_norm));
  s.check("sdp.ascent", worst_gain <= 1e-9, fmt("worst sweep decrease %.3g", worst_gain));
  s.check("sdp.stationarity", worst_resid <= 1e-8,
          fmt("max stationarity residual %.3g", worst_resid));
  s.check("sdp.affine_identity", worst_affine <= 1e-7,
          fmt("max relative defect %.3g over 20 instances", worst_affine));
  s.check("sdp.rank_robustness", worst_rank <= 1e-6,
          fmt("max relative gap auto-rank vs full rank %.3g", worst_rank));
  s.check("sdp.relaxation", worst_relax <= 1e-7,
          fmt("max QMaxCut excess over SDP_S %.3g", worst_relax));
  s.check("sdp.moment_diagonal", worst_diag <= 1e-9,
          fmt("max |M_ii - S(S+1)| = %.3g", worst_diag));
}

void check_rounding(Suite& s) {
  {
    const auto g0 = WeightedGraph::single_edge(2.0);
    SdpOptions opts;
    opts.seed = s.opts().seed;
    const auto sol = solve_sdp(g0, 3.0, opts);
    const auto rep = round_and_evaluate(g0, sol.gram, 200, s.opts().seed);
    const double err = std::max(std::abs(rep.best_value - 2.0),
                                std::abs(rep.mean_value - 2.0));
    s.check("rounding.antipodal_exact", err <= 1e-9,
            fmt("max deviation from 2 across trials %.3g", err));
  }

  {
    bool ok = true;
    std::string detail;
    const double rhos[] = {-1.0, -0.75, -0.5, -0.25, 0.0};
    for (double rho : rhos) {
      const auto est = estimate_overlap_mean(rho, s.opts().overlap_trials,
                                             s.opts().seed + 17);
      const double target = f_star(rho);
      const double err = std::abs(est.mean - target);
      if (err > 4.0 * est.std_error + 1e-12) {
        ok = false;
        detail += fmt("rho=%.2f err=%.3g se=%.3g; ", rho, err, est.std_error);
      }
    }
    if (ok) detail = fmt("all within 4 standard errors at %ld trials", s.opts().overlap_trials);
    s.check("rounding.overlap_law", ok, detail);
  }

  {
    const auto g = test_instance(s.opts().seed, 2, 6);
    SdpOptions opts;
    opts.seed = s.opts().seed + 5;
    const auto sol = solve_sdp(g, 1.0, opts);
    const auto base = round_and_evaluate(g, sol.gram, s.opts().rounding_trials,
                                         s.opts().seed + 23);
    auto gen = rng::make_stream(s.opts().seed, 4242);
    rng::NormalSampler normal(gen);
    const int k = sol.gram.rank();
    Eigen::MatrixXd m(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m(r, c) = normal();
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
    GramVectors rotated{q * sol.gram.y, sol.gram.c};
    const auto turned = round_and_evaluate(g, rotated, s.opts().rounding_trials,
                                           s.opts().seed + 24);
    const double gap = std::abs(base.mean_value - turned.mean_value);
    const double joint = std::hypot(base.std_error, turned.std_error);
    s.check("rounding.rotation_invariance", gap <= 5.0 * joint + 1e-12,
            fmt("mean gap %.3g vs joint se %.3g", gap, joint));
  }

  double worst_var = 0.0, worst_thm2 = 0.0;
  for (int i = 0; i < 8; ++i) {
    const auto g = test_instance(s.opts().seed, i, 6);
    const Spin spin(1 + i % 2);
    SdpOptions opts;
    opts.seed = s.opts().seed + 31 + i;
    const auto sol = solve_sdp(g, spin_coefficient(spin), opts);
    const auto rep = round_and_evaluate(g, sol.gram, s.opts().rounding_trials,
                                        s.opts().seed + 700 + i);
    if (exactly_solvable(spin, g.vertex_count())) {
      const double qmc = qmaxcut_value(g, spin);
      worst_var = std::max(worst_var, rep.best_value - qmc);
    }
    const double target = alpha_gp(spin).value * sol.value;
    worst_thm2 = std::max(worst_thm2,
                          target - rep.mean_value - 4.0 * rep.std_error - 1e-12);
  }
  s.check("rounding.variational_bound", worst_var <= 1e-9,
          fmt("max rounded excess over QMaxCut %.3g", worst_var));
  s.check("rounding.guarantee_mean", worst_thm2 <= 0.0,
          fmt("worst slack below alpha_GP * SDP_S %.3g", worst_thm2));
}

void check_ratios(Suite& s) {
  double worst_odd = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double rho = i / 100.0;
    worst_odd = std::max(worst_odd, std::abs(f_star(-rho) + f_star(rho)));
  }
  s.check("ratios.odd", worst_odd <= 1e-14, fmt("max |F*(-r)+F*(r)| = %.3g", worst_odd));

  bool below = true;
  for (int i = 1; i < 100; ++i) {
    const double rho = i / 100.0;
    const double v = f_star(rho);
    if (!(0.0 < v && v < rho)) below = false;
  }
  s.check("ratios.fstar_below_rho", below, "0 < F*(3,rho) < rho on (0,1) grid");

  double worst_end = 0.0;
  for (int two_s = 1; two_s <= 10; ++two_s) {
    const Spin spin(two_s);
    worst_end = std::max(worst_end, std::abs(ratio_integrand_s(spin, -1.0) -
                                             alpha_star(spin)));
    worst_end = std::max(worst_end, std::abs(ratio_integrand_s(spin, 0.0) - 1.0));
  }
  worst_end = std::max(worst_end, std::abs(hyp2f1_half(1.0) - 3.0 * M_PI / 8.0));
  worst_end = std::max(worst_end, std::abs(f_star(1.0) - 1.0));
  worst_end = std::max(worst_end, std::abs(f_star(-1.0) + 1.0));
  s.check("ratios.endpoints", worst_end <= 1e-12, fmt("max deviation %.3g", worst_end));

  const RatioValue bov = alpha_bov();
  const RatioValue gp_half = alpha_gp(Spin(1));
  const bool range_ok = bov.value > 0.955 && bov.value < 0.957 &&
                        gp_half.value > 0.496 && gp_half.value < 0.500;
  s.check("ratios.minimizers", range_ok,
          fmt("alpha_bov=%.6f at rho=%.6f, alpha_gp(1/2)=%.6f at rho=%.6f", bov.value,
              bov.argmin_rho, gp_half.value, gp_half.argmin_rho));

  bool interior = bov.argmin_rho > -1.0 + 1e-9 && bov.argmin_rho < -1e-6;
  for (int two_s = 1; two_s <= 10; ++two_s) {
    const RatioValue v = alpha_gp(Spin(two_s));
    interior = interior && v.argmin_rho > -1.0 + 1e-9 && v.argmin_rho < -1e-6;
  }
  s.check("ratios.argmin_interior", interior, "all minimizers strictly inside (-1, 0)");

  const ChainReport chain = verify_chain(10);
  s.check("ratios.chain", chain.ok && chain.min_margin > 0.0,
          fmt("min margin %.3g, %zu violations", chain.min_margin,
              chain.violations.size()));

  const double lieb_half = alpha_lieb(Spin(1));
  s.check("ratios.lieb_small_spin", std::abs(lieb_half - bov.value / 9.0) <= 1e-12,
          fmt("alpha_L(1/2) = alpha_bov/9 = %.6f", lieb_half));
}

void check_gadget(Suite& s) {
  double worst_kernel = 0.0, worst_gap = 0.0, worst_ph2p = 0.0;
  for (int two_s = 1; two_s <= 3; ++two_s) {
    const Spin spin(two_s);
    const int d2 = spin.dim() * spin.dim();
    MatrixXc h0 = MatrixXc::Zero(d2, d2);
    {
      const SpinTriple t = spin_matrices(spin);
      for (int axis = 0; axis < 3; ++axis) {
        const SparseOperator a = site_operator(t.component(axis), 0, 2);
        const SparseOperator b = site_operator(t.component(axis), 1, 2);
        h0 += MatrixXc(SparseOperator(a * b));
      }
      h0 = 2.0 * h0 + 2.0 * spin.casimir() * MatrixXc::Identity(d2, d2);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(h0);
    worst_kernel = std::max(worst_kernel, std::abs(es.eigenvalues()[0]));
    worst_gap = std::max(worst_gap, std::abs(es.eigenvalues()[1] - 2.0));
    worst_ph2p = std::max(worst_ph2p, gadget_ph2p_norm(spin));
  }
  s.check("gadget.kernel", worst_kernel <= 1e-10,
          fmt("max |ground energy| = %.3g", worst_kernel));
  s.check("gadget.first_excited", worst_gap <= 1e-10,
          fmt("first excited level sits at 2 S_tot(S_tot+1)|_1 = 2; max drift %.3g",
              worst_gap));
  s.check("gadget.ph2p", worst_ph2p <= 1e-12, fmt("max ||P H2 P|| = %.3g", worst_ph2p));

  double worst_resid = 0.0, worst_invar = 0.0;
  bool positive = true;
  std::string fits;
  for (int two_s = 1; two_s <= 2; ++two_s) {
    const Spin spin(two_s);
    const auto eff = effective_hamiltonian(spin);
    worst_resid = std::max(worst_resid, eff.fit.residual);
    positive = positive && eff.fit.coupling > 0.0;
    const double reference = spin.casimir() / (3.0 * (spin.two_s + 1.0));
    fits += fmt("2S=%d: c=%.9g, e=%.9g, c/ref=%.6g; ", two_s, eff.fit.coupling,
                eff.fit.offset, eff.fit.coupling / reference);

    const SpinTriple t = spin_matrices(spin);
    const int d = spin.dim();
    for (int axis = 0; axis < 3; ++axis) {
      MatrixXc total = MatrixXc::Zero(d * d, d * d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          for (int q = 0; q < d; ++q) {
            total(r * d + q, c * d + q) += t.component(axis)(r, c);
            total(q * d + r, q * d + c) += t.component(axis)(r, c);
          }
        }
      const MatrixXc comm = eff.matrix * total - total * eff.matrix;
      worst_invar = std::max(worst_invar, comm.cwiseAbs().maxCoeff());
    }
  }
  s.check("gadget.effective_fit", worst_resid <= 1e-10 && positive,
          fmt("max residual %.3g; %s", worst_resid, fits.c_str()));
  s.check("gadget.su2_invariance", worst_invar <= 1e-10,
          fmt("max |[M, S_tot]| entry = %.3g", worst_invar));

  double worst_corr = 0.0;
  std::string corr_detail;
  for (int two_s = 1; two_s <= 3; ++two_s) {
    const Spin spin(two_s);
    const Eigen::Matrix3d corr = mediator_correlation(spin);
    const double expected_diag = -spin.casimir() / 3.0;
    const double stated = spin.casimir() / (3.0 * (spin.two_s + 1.0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        worst_corr = std::max(
            worst_corr, std::abs(corr(i, j) - (i == j ? expected_diag : 0.0)));
    corr_detail += fmt("2S=%d: diag=%.6g (unsigned reference %.6g); ", two_s,
                       corr(2, 2), stated);
  }
  s.check("gadget.mediator_correlation", worst_corr <= 1e-10,
          fmt("computed -S(S+1)/3 on the diagonal; %s", corr_detail.c_str()));

  bool monotone = true, scaled_ok = true;
  std::string conv_detail;
  for (int two_s = 1; two_s <= 2; ++two_s) {
    const auto rows = spectral_convergence(Spin(two_s), {100.0, 1000.0, 10000.0});
    double lo = rows[0].scaled_error, hi = rows[0].scaled_error;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && !(rows[i].error < rows[i - 1].error)) monotone = false;
      lo = std::min(lo, rows[i].scaled_error);
      hi = std::max(hi, rows[i].scaled_error);
    }
    if (hi > 3.0 * lo) scaled_ok = false;
    conv_detail += fmt("2S=%d: errors %.3g/%.3g/%.3g; ", two_s, rows[0].error,
                       rows[1].error, rows[2].error);
  }
  s.check("gadget.spectral_convergence", monotone && scaled_ok, conv_detail);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Suite suite(opts);
  check_graph(suite);
  check_spin(suite);
  check_exact(suite);
  check_classical(suite);
  check_sdp(suite);
  check_rounding(suite);
  check_ratios(suite);
  check_gadget(suite);
  return suite.take();
}

}  // namespace sqmc
