#include <doctest.h>

#include <cmath>

#include "sqmc/ratios.hpp"

using namespace sqmc;

namespace {

// Independent 50-term reference: explicit Pochhammer products, no recurrence.
double pochhammer_series(double z, int terms) {
  auto poch = [](double a, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
  };
  double sum = 0.0;
  for (int n = 0; n < terms; ++n) {
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) factorial *= k;
    sum += poch(0.5, n) * poch(0.5, n) / poch(2.5, n) * std::pow(z, n) / factorial;
  }
  return sum;
}

}  // namespace

TEST_CASE("hypergeometric series evaluation") {
  CHECK(hyp2f1_half(0.0) == 1.0);
  CHECK(hyp2f1_half(1.0) == doctest::Approx(3.0 * M_PI / 8.0).epsilon(1e-15));
  CHECK(std::abs(hyp2f1_half(0.25) - pochhammer_series(0.25, 50)) < 1e-13);
  CHECK(std::abs(hyp2f1_half(0.5) - pochhammer_series(0.5, 80)) < 1e-13);
  CHECK_THROWS_AS(hyp2f1_half(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(hyp2f1_half(1.1), std::invalid_argument);
}

TEST_CASE("expected-overlap function") {
  CHECK(f_star(0.0) == 0.0);
  CHECK(std::abs(f_star(1.0) - 1.0) < 1e-12);
  CHECK(std::abs(f_star(-1.0) + 1.0) < 1e-12);
  for (int i = 0; i <= 50; ++i) {
    const double rho = i / 50.0;
    CHECK(std::abs(f_star(-rho) + f_star(rho)) < 1e-14);
    if (i > 0 && i < 50) {
      CHECK(f_star(rho) > 0.0);
      CHECK(f_star(rho) < rho);
    }
  }
  CHECK_THROWS_AS(f_star(1.5), std::invalid_argument);
}

TEST_CASE("endpoint identities of the ratio integrands") {
  for (int two_s = 1; two_s <= 10; ++two_s) {
    const Spin s(two_s);
    CHECK(std::abs(ratio_integrand_s(s, -1.0) - alpha_star(s)) < 1e-12);
    CHECK(ratio_integrand_s(s, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(ratio_integrand_mc(-1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("minimized ratios land on the reported values") {
  const RatioValue bov = alpha_bov();
  CHECK(bov.value > 0.955);
  CHECK(bov.value < 0.957);
  CHECK(bov.argmin_rho > -1.0);
  CHECK(bov.argmin_rho < -1e-6);
  CHECK(ratio_integrand_mc(-1.0) > bov.value);  // interior argmin

  const RatioValue gp_half = alpha_gp(Spin(1));
  CHECK(gp_half.value > 0.496);
  CHECK(gp_half.value < 0.500);
  CHECK(gp_half.value <= alpha_star(Spin(1)) + 1e-12);

  // alpha_L(1/2) = alpha_bov / 9: about 0.106, not 0.25-competitive.
  CHECK(alpha_lieb(Spin(1)) == doctest::Approx(bov.value / 9.0).epsilon(1e-12));
  CHECK(alpha_lieb(Spin(1)) < 0.25);
}

TEST_CASE("alpha_gp is squeezed by its endpoint and the bov limit") {
  for (int two_s = 1; two_s <= 10; ++two_s) {
    const Spin s(two_s);
    const RatioValue gp = alpha_gp(s);
    CHECK(gp.value <= alpha_star(s) + 1e-12);  // f_S(-1) is feasible
    CHECK(gp.value < alpha_bov().value);
    CHECK(gp.value > alpha_lieb(s));
  }
  CHECK(std::abs(alpha_gp(Spin(200)).value - alpha_bov().value) < 0.01);
}

TEST_CASE("chain report is clean through 2S = 10") {
  const ChainReport rep = verify_chain(10);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  CHECK(rep.min_margin > 0.0);
}

TEST_CASE("ratio table structure") {
  const RatioTable table = build_ratio_table(6);
  REQUIRE(table.rows.size() == 6);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    CHECK(row.two_s == static_cast<int>(i) + 1);
    CHECK(row.alpha_lieb < row.alpha_gp);
    CHECK(row.alpha_gp < table.alpha_bov);
    if (i > 0) {
      CHECK(row.alpha_gp > table.rows[i - 1].alpha_gp);
      CHECK(row.alpha_lieb > table.rows[i - 1].alpha_lieb);
    }
  }
  CHECK(table.gp_two_s_99pct > 0);
  CHECK(table.lieb_two_s_99pct > 0);
  // (S/(S+1))^2 first reaches 0.99 at S = 198.5: (397/399)^2 > 0.99 > (396/398)^2.
  CHECK(table.lieb_two_s_99pct == 397);

  const std::string csv = table.to_csv();
  CHECK(csv.find("two_s,alpha_star,alpha_lieb,alpha_gp,argmin_rho") != std::string::npos);
  CHECK(csv.find("alpha_bov") != std::string::npos);
}
