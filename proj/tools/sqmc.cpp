#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqmc/classical.hpp"
#include "sqmc/exact.hpp"
#include "sqmc/gadget.hpp"
#include "sqmc/graph.hpp"
#include "sqmc/ratios.hpp"
#include "sqmc/rng.hpp"
#include "sqmc/rounding.hpp"
#include "sqmc/sdp.hpp"
#include "sqmc/verify.hpp"
#include "sqmc/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSizeCap = 2;
constexpr int kExitVerifyFailed = 3;

class Stopwatch {
 public:
  explicit Stopwatch(std::string label) : label_(std::move(label)) {
    start_ = std::chrono::steady_clock::now();
  }
  // Timing goes to stderr, never into the report: report files must be
  // byte-identical across reruns of the same config.
  ~Stopwatch() {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start_);
    std::fprintf(stderr, "[time] %s: %.3f s\n", label_.c_str(), elapsed.count());
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

void emit(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
  }
}

sqmc::WeightedGraph load_instance(const std::string& instance_path,
                                  const std::string& generator_spec) {
  if (!instance_path.empty()) {
    std::ifstream f(instance_path);
    if (!f) throw std::invalid_argument("cannot read instance file " + instance_path);
    std::stringstream buf;
    buf << f.rdbuf();
    return sqmc::WeightedGraph::parse(buf.str());
  }
  return sqmc::WeightedGraph::from_generator_spec(generator_spec);
}

std::vector<double> parse_deltas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty delta list");
  return out;
}

int run_solve(const std::string& instance_path, const std::string& generator_spec,
              int two_s, const std::string& algorithm, long trials,
              std::uint64_t seed, const std::string& exact_mode,
              const std::string& out_path) {
  const auto g = load_instance(instance_path, generator_spec);
  const sqmc::Spin spin(two_s);
  const auto algo = algorithm == "lieb_bov" ? sqmc::Algorithm::LiebBov
                                            : sqmc::Algorithm::GpS;

  sqmc::ExactOptions exact_opts;
  exact_opts.lanczos_seed = sqmc::rng::mix(seed) + 4;
  const bool solvable = sqmc::exactly_solvable(spin, g.vertex_count(), exact_opts);
  if (exact_mode == "force" && !solvable)
    throw sqmc::SizeCapError("instance exceeds the exact-solver dimension cap");
  const bool do_exact = exact_mode != "off" && solvable;

  sqmc::SdpOptions sdp_opts;
  sdp_opts.seed = sqmc::rng::mix(seed) + 1;
  const std::uint64_t prod_seed = sqmc::rng::mix(seed) + 2;
  const std::uint64_t round_seed = sqmc::rng::mix(seed) + 3;

  json report;
  report["command"] = "solve";
  report["version"] = std::string(sqmc::kVersion);
  report["config"] = {{"instance", instance_path},
                      {"generate", generator_spec},
                      {"two_s", two_s},
                      {"algorithm", algorithm},
                      {"trials", trials},
                      {"seed", seed},
                      {"exact", exact_mode}};
  report["instance"] = {{"vertices", g.vertex_count()},
                        {"edges", g.edges().size()},
                        {"total_weight", g.total_weight()}};

  json results;
  {
    Stopwatch t("product state local search");
    const auto prod = sqmc::prod_local_search(g, 32, prod_seed);
    results["prod_value"] = prod.value;
  }
  sqmc::SdpSolution mc, ss;
  {
    Stopwatch t("sdp relaxations");
    mc = sqmc::solve_sdp(g, 1.0, sdp_opts);
    ss = sqmc::solve_sdp(g, sqmc::spin_coefficient(spin), sdp_opts);
    results["sdp_mc"] = mc.value;
    results["sdp_s"] = ss.value;
  }
  std::optional<double> qmc;
  if (do_exact) {
    Stopwatch t("exact diagonalization");
    qmc = sqmc::qmaxcut_value(g, spin, exact_opts);
    results["qmaxcut_value"] = *qmc;
    results["qha_value"] = sqmc::qha_value(g, spin, exact_opts);
  } else {
    results["qmaxcut_value"] = nullptr;
    results["qha_value"] = nullptr;
  }
  {
    Stopwatch t("rounding");
    const auto& relaxation = algo == sqmc::Algorithm::GpS ? ss : mc;
    const auto rounded = sqmc::round_and_evaluate(g, relaxation.gram, trials, round_seed);
    results["rounded"] = {{"best", rounded.best_value},
                          {"mean", rounded.mean_value},
                          {"std_error", rounded.std_error},
                          {"trials", trials}};
    json ratios;
    ratios["best_vs_sdp"] = relaxation.value > 0.0
                                ? json(rounded.best_value / relaxation.value)
                                : json(nullptr);
    if (qmc && *qmc > 0.0) {
      ratios["best_vs_exact"] = rounded.best_value / *qmc;
      ratios["mean_vs_exact"] = rounded.mean_value / *qmc;
    } else {
      ratios["best_vs_exact"] = nullptr;
      ratios["mean_vs_exact"] = nullptr;
    }
    results["ratios"] = ratios;
  }
  results["seeds"] = {{"sdp", sdp_opts.seed},
                      {"prod", prod_seed},
                      {"rounding", round_seed},
                      {"lanczos", exact_opts.lanczos_seed}};
  report["results"] = results;
  emit(report, out_path);
  return kExitOk;
}

int run_ratios(int two_s_max, const std::string& format, const std::string& out_path) {
  Stopwatch t("ratio table");
  const auto table = sqmc::build_ratio_table(two_s_max);
  if (format == "csv") {
    emit_text(table.to_csv(), out_path);
    return kExitOk;
  }
  json report;
  report["command"] = "ratios";
  report["version"] = std::string(sqmc::kVersion);
  report["config"] = {{"two_s_max", two_s_max}};
  report["alpha_bov"] = table.alpha_bov;
  report["alpha_bov_argmin_rho"] = table.alpha_bov_argmin;
  report["two_s_at_99pct_of_bov"] = {{"gp", table.gp_two_s_99pct},
                                     {"lieb", table.lieb_two_s_99pct}};
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"two_s", row.two_s},
                    {"alpha_star", row.alpha_star},
                    {"alpha_lieb", row.alpha_lieb},
                    {"alpha_gp", row.alpha_gp},
                    {"argmin_rho", row.argmin_rho}});
  }
  report["rows"] = rows;
  emit(report, out_path);
  return kExitOk;
}

int run_gadget(int two_s, const std::string& deltas_text, bool include_h1,
               const std::string& format, const std::string& out_path) {
  if (two_s > 4)
    throw sqmc::SizeCapError("gadget diagonalization limited to 2S <= 4");
  const sqmc::Spin spin(two_s);
  const auto deltas = parse_deltas(deltas_text);

  Stopwatch t("gadget lab");
  const auto eff = sqmc::effective_hamiltonian(spin, include_h1);
  const auto rows = sqmc::spectral_convergence(spin, deltas, include_h1);
  const double ph2p = sqmc::gadget_ph2p_norm(spin);
  const double reference = spin.casimir() / (3.0 * (spin.two_s + 1.0));

  if (format == "csv") {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf), "# coupling,%.12g,offset,%.12g,fit_residual,%.3g\n",
                  eff.fit.coupling, eff.fit.offset, eff.fit.residual);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "# coupling_reference,%.12g,coupling_over_reference,%.9g\n",
                  reference, eff.fit.coupling / reference);
    out += buf;
    std::snprintf(buf, sizeof(buf), "# ph2p_norm,%.3g\n", ph2p);
    out += buf;
    out += "two_s,delta,spec_error,scaled_error\n";
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g\n", two_s, row.delta,
                    row.error, row.scaled_error);
      out += buf;
    }
    emit_text(out, out_path);
    return kExitOk;
  }

  json report;
  report["command"] = "gadget";
  report["version"] = std::string(sqmc::kVersion);
  report["config"] = {{"two_s", two_s},
                      {"deltas", deltas},
                      {"include_h1", include_h1}};
  report["effective"] = {{"coupling", eff.fit.coupling},
                         {"offset", eff.fit.offset},
                         {"fit_residual", eff.fit.residual},
                         {"coupling_reference", reference},
                         {"coupling_over_reference", eff.fit.coupling / reference}};
  report["ph2p_norm"] = ph2p;
  json conv = json::array();
  for (const auto& row : rows)
    conv.push_back({{"delta", row.delta},
                    {"spec_error", row.error},
                    {"scaled_error", row.scaled_error}});
  report["convergence"] = conv;
  emit(report, out_path);
  return kExitOk;
}

int run_verify(std::uint64_t seed, const std::string& out_path) {
  sqmc::VerifyOptions opts;
  opts.seed = seed;
  std::vector<sqmc::CheckResult> results;
  {
    Stopwatch t("verification suite");
    results = sqmc::run_verification(opts);
  }
  json report;
  report["command"] = "verify";
  report["version"] = std::string(sqmc::kVersion);
  report["config"] = {{"seed", seed}};
  json checks = json::array();
  int failures = 0;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++failures;
  }
  report["checks"] = checks;
  report["passed"] = static_cast<int>(results.size()) - failures;
  report["failed"] = failures;
  emit(report, out_path);
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-S quantum max-cut toolkit: exact values, SDP relaxations, "
               "coherent-state rounding, ratio functions, mediator gadget"};
  app.set_version_flag("--version", std::string(sqmc::kVersion));
  app.require_subcommand(1);

  // solve
  std::string instance_path, generator_spec, algorithm = "gp_s", exact_mode = "auto";
  std::string out_path;
  int two_s = 1;
  long trials = 10000;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "solve one instance end to end");
  auto* inst_opt = solve->add_option("--instance", instance_path, "instance file");
  auto* gen_opt = solve->add_option("--generate", generator_spec,
                                    "generator spec, e.g. single_edge:2 or "
                                    "random:6:0.5:1:7");
  inst_opt->excludes(gen_opt);
  solve->add_option("--two-s", two_s, "twice the spin (1 means S = 1/2)")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--algorithm", algorithm, "rounding pipeline")
      ->check(CLI::IsMember({"lieb_bov", "gp_s"}));
  solve->add_option("--trials", trials, "rounding trials")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "master seed");
  solve->add_option("--exact", exact_mode, "exact-solver policy")
      ->check(CLI::IsMember({"auto", "force", "off"}));
  solve->add_option("--out", out_path, "report path (default stdout)");

  // ratios
  int two_s_max = 10;
  std::string format = "json";
  auto* ratios = app.add_subcommand("ratios", "approximation-ratio table");
  ratios->add_option("--two-s-max", two_s_max, "largest 2S row")
      ->check(CLI::PositiveNumber);
  ratios->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  ratios->add_option("--out", out_path, "report path (default stdout)");

  // gadget
  std::string deltas_text = "100,1000,10000";
  bool include_h1 = false;
  auto* gadget = app.add_subcommand("gadget", "mediator-gadget spectral checks");
  gadget->add_option("--two-s", two_s, "twice the spin")
      ->required()
      ->check(CLI::PositiveNumber);
  gadget->add_option("--deltas", deltas_text, "comma-separated increasing list");
  gadget->add_flag("--include-h1", include_h1, "add the identity compensation term");
  gadget->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  gadget->add_option("--out", out_path, "report path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run every module invariant suite");
  verify->add_option("--seed", seed, "suite seed");
  verify->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) {
      if (instance_path.empty() && generator_spec.empty())
        throw std::invalid_argument("need --instance or --generate");
      return run_solve(instance_path, generator_spec, two_s, algorithm, trials, seed,
                       exact_mode, out_path);
    }
    if (ratios->parsed()) return run_ratios(two_s_max, format, out_path);
    if (gadget->parsed())
      return run_gadget(two_s, deltas_text, include_h1, format, out_path);
    if (verify->parsed()) return run_verify(seed, out_path);
  } catch (const sqmc::SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
