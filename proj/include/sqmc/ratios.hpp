#ifndef SQMC_RATIOS_HPP
#define SQMC_RATIOS_HPP

#include <string>
#include <vector>

#include "sqmc/spin.hpp"

namespace sqmc {

// 2F1(1/2, 1/2; 5/2; z) for z in [0, 1]; the z = 1 endpoint takes its closed
// value 3*pi/8.
double hyp2f1_half(double z);

// F*(3, rho) = (8 / 3 pi) rho 2F1(1/2, 1/2; 5/2; rho^2); the expected
// rounded overlap of two unit vectors at inner product rho. Odd in rho,
// F*(3, +-1) = +-1.
double f_star(double rho);

// g(rho) = (1 - F*(3, rho)) / (1 - rho)
double ratio_integrand_mc(double rho);

// f_S(rho) = (1 - F*(3, rho)) / (1 - ((S+1)/S) rho)
double ratio_integrand_s(Spin s, double rho);

struct RatioValue {
  double value = 0.0;
  double argmin_rho = 0.0;
};

// min over rho in [-1, 0) of the ratio functions above; dense grid plus
// golden-section refinement.
RatioValue alpha_bov();
RatioValue alpha_gp(Spin s);

double alpha_lieb(Spin s);  // (S/(S+1))^2 * alpha_BOV
double alpha_star(Spin s);  // 2S / (2S+1)

struct RatioRow {
  int two_s = 0;
  double alpha_star = 0.0;
  double alpha_lieb = 0.0;
  double alpha_gp = 0.0;
  double argmin_rho = 0.0;
};

struct RatioTable {
  double alpha_bov = 0.0;
  double alpha_bov_argmin = 0.0;
  std::vector<RatioRow> rows;
  // smallest 2S whose ratio reaches 99% of alpha_BOV
  int gp_two_s_99pct = 0;
  int lieb_two_s_99pct = 0;

  std::string to_csv() const;
};

RatioTable build_ratio_table(int two_s_max);

struct ChainViolation {
  int two_s = 0;
  double rho = 0.0;
  std::string which;
};

struct ChainReport {
  bool ok = true;
  double min_margin = 0.0;
  std::vector<ChainViolation> violations;
};

// Grid check of (S/(S+1))^2 g < f_S < f_{S+1} < g on [-1, -1e-6], plus
// strict monotonicity of the minimized ratios below alpha_BOV.
ChainReport verify_chain(int two_s_max);

}  // namespace sqmc

#endif  // SQMC_RATIOS_HPP
