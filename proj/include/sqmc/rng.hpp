#ifndef SQMC_RNG_HPP
#define SQMC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace sqmc::rng {

// splitmix64 finalizer; bijective on uint64.
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent substream for (seed, stream). Streams indexed by trial /
// restart number so concurrent reductions stay reproducible.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(mix(mix(seed) + stream));
}

// Uniform in [0,1).
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform in (0,1); never returns 0, safe under log().
inline double uniform_open01(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller standard normals. Hand-rolled so the deviate sequence does not
// depend on the standard library implementation.
class NormalSampler {
 public:
  explicit NormalSampler(std::mt19937_64& g) : g_(&g) {}

  double operator()() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_open01(*g_);
    const double u2 = uniform01(*g_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64* g_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Uniform point on the unit sphere S^{k-1}.
inline Eigen::VectorXd random_unit_vector(int k, std::mt19937_64& g) {
  NormalSampler normal(g);
  Eigen::VectorXd v(k);
  do {
    for (int i = 0; i < k; ++i) v[i] = normal();
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

inline Eigen::Vector3d random_unit3(std::mt19937_64& g) {
  return random_unit_vector(3, g);
}

}  // namespace sqmc::rng

#endif  // SQMC_RNG_HPP
