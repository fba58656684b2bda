#include "sqmc/ratios.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace sqmc {

namespace {

constexpr double kGridLow = -1.0;
constexpr double kGridHigh = -1e-9;
constexpr int kGridPoints = 10000;

double grid_rho(int i) {
  return kGridLow + (kGridHigh - kGridLow) * i / (kGridPoints - 1);
}

// F*(3, rho) tabulated once on the minimization grid; every alpha shares it.
const std::vector<double>& f_star_grid() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i) t[i] = f_star(grid_rho(i));
    return t;
  }();
  return table;
}

RatioValue golden_section(const std::function<double(double)>& f, double a, double b,
                          double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {f(xm), xm};
}

// min over [-1, 0) of (1 - F*) / (1 - c rho): dense grid bracket, then
// golden-section to 1e-12 in rho.
RatioValue minimize_ratio(double c) {
  const auto& fs = f_star_grid();
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGridPoints; ++i) {
    const double v = (1.0 - fs[i]) / (1.0 - c * grid_rho(i));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  auto f = [c](double rho) { return (1.0 - f_star(rho)) / (1.0 - c * rho); };
  return golden_section(f, grid_rho(std::max(0, best - 1)),
                        grid_rho(std::min(kGridPoints - 1, best + 1)), 1e-12);
}

}  // namespace

double hyp2f1_half(double z) {
  if (z < 0.0 || z > 1.0) throw std::invalid_argument("hyp2f1_half needs z in [0,1]");
  if (z == 1.0) return 3.0 * M_PI / 8.0;
  double term = 1.0;
  double sum = 1.0;
  for (long n = 0; n < 100000000; ++n) {
    term *= z * (n + 0.5) * (n + 0.5) / ((n + 2.5) * (n + 1.0));
    sum += term;
    if (term < 1e-15 * sum) break;
  }
  return sum;
}

double f_star(double rho) {
  if (std::abs(rho) > 1.0) throw std::invalid_argument("f_star needs |rho| <= 1");
  return 8.0 / (3.0 * M_PI) * rho * hyp2f1_half(rho * rho);
}

double ratio_integrand_mc(double rho) { return (1.0 - f_star(rho)) / (1.0 - rho); }

double ratio_integrand_s(Spin s, double rho) {
  return (1.0 - f_star(rho)) / (1.0 - spin_coefficient(s) * rho);
}

RatioValue alpha_bov() {
  static const RatioValue cached = minimize_ratio(1.0);
  return cached;
}

RatioValue alpha_gp(Spin s) { return minimize_ratio(spin_coefficient(s)); }

double alpha_lieb(Spin s) {
  const double ratio = s.s() / (s.s() + 1.0);
  return ratio * ratio * alpha_bov().value;
}

double alpha_star(Spin s) {
  return static_cast<double>(s.two_s) / (s.two_s + 1.0);
}

RatioTable build_ratio_table(int two_s_max) {
  if (two_s_max < 1) throw std::invalid_argument("need 2S >= 1");
  RatioTable table;
  const RatioValue bov = alpha_bov();
  table.alpha_bov = bov.value;
  table.alpha_bov_argmin = bov.argmin_rho;

  for (int two_s = 1; two_s <= two_s_max; ++two_s) {
    const Spin s(two_s);
    const RatioValue gp = alpha_gp(s);
    RatioRow row;
    row.two_s = two_s;
    row.alpha_star = alpha_star(s);
    row.alpha_lieb = alpha_lieb(s);
    row.alpha_gp = gp.value;
    row.argmin_rho = gp.argmin_rho;
    table.rows.push_back(row);
  }

  // Both ratio families increase monotonically toward alpha_BOV, so the 99%
  // crossings can be bisected.
  const double target = 0.99 * bov.value;
  auto first_crossing = [&](auto&& value_at) {
    int lo = 1, hi = 1;
    while (value_at(hi) < target) {
      lo = hi;
      hi *= 2;
      if (hi > (1 << 20)) return 0;  // not reached
    }
    while (lo + 1 < hi) {
      const int mid = lo + (hi - lo) / 2;
      (value_at(mid) < target ? lo : hi) = mid;
    }
    return value_at(1) >= target ? 1 : hi;
  };
  table.gp_two_s_99pct =
      first_crossing([](int two_s) { return alpha_gp(Spin(two_s)).value; });
  table.lieb_two_s_99pct = first_crossing([&](int two_s) {
    const double r = 0.5 * two_s / (0.5 * two_s + 1.0);
    return r * r * bov.value;
  });
  return table;
}

std::string RatioTable::to_csv() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "# alpha_bov,%.6g,argmin_rho,%.6g\n", alpha_bov,
                alpha_bov_argmin);
  std::string out = buf;
  std::snprintf(buf, sizeof(buf),
                "# two_s_at_99pct_of_bov: gp,%d,lieb,%d\n", gp_two_s_99pct,
                lieb_two_s_99pct);
  out += buf;
  out += "two_s,alpha_star,alpha_lieb,alpha_gp,argmin_rho\n";
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.6g,%.6g,%.6g,%.6g\n", row.two_s,
                  row.alpha_star, row.alpha_lieb, row.alpha_gp, row.argmin_rho);
    out += buf;
  }
  return out;
}

ChainReport verify_chain(int two_s_max) {
  ChainReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  constexpr int kChainPoints = 1000;
  const double lo = -1.0, hi = -1e-6;

  for (int two_s = 1; two_s <= two_s_max; ++two_s) {
    const Spin s(two_s);
    const Spin s_next(two_s + 2);
    const double shrink = s.s() / (s.s() + 1.0);
    const double c_s = spin_coefficient(s);
    const double c_next = spin_coefficient(s_next);
    for (int i = 0; i < kChainPoints; ++i) {
      const double rho = lo + (hi - lo) * i / (kChainPoints - 1);
      const double numer = 1.0 - f_star(rho);
      const double g = numer / (1.0 - rho);
      const double fs = numer / (1.0 - c_s * rho);
      const double fs1 = numer / (1.0 - c_next * rho);
      const double checks[3] = {fs - shrink * shrink * g, fs1 - fs, g - fs1};
      const char* names[3] = {"lieb_lower", "monotone_in_s", "bov_upper"};
      for (int c = 0; c < 3; ++c) {
        rep.min_margin = std::min(rep.min_margin, checks[c]);
        if (!(checks[c] > 0.0)) {
          rep.ok = false;
          rep.violations.push_back({two_s, rho, names[c]});
        }
      }
    }
  }

  double prev_gp = 0.0;
  const double bov = alpha_bov().value;
  for (int two_s = 1; two_s <= two_s_max; ++two_s) {
    const Spin s(two_s);
    const double gp = alpha_gp(s).value;
    const double lieb = alpha_lieb(s);
    if (!(lieb < gp && gp < bov)) {
      rep.ok = false;
      rep.violations.push_back({two_s, 0.0, "alpha_chain"});
    }
    if (two_s > 1 && !(gp > prev_gp)) {
      rep.ok = false;
      rep.violations.push_back({two_s, 0.0, "alpha_gp_monotone"});
    }
    prev_gp = gp;
  }
  return rep;
}

}  // namespace sqmc
