// Seeded random sampling for the property suites.  Distributions are built
// from raw mt19937_64 output so that a given seed produces the same stream on
// every platform (std::uniform_real_distribution makes no such promise).
#pragma once

#include "triad/liegroup.hpp"
#include "triad/linalg.hpp"

#include <cstdint>
#include <random>

namespace triad {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Marsaglia polar.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  Vec3 vec_normal(double sigma = 1.0) {
    return sigma * Vec3(normal(), normal(), normal());
  }

  Vec3 vec_uniform(double a, double b) {
    return Vec3(uniform(a, b), uniform(a, b), uniform(a, b));
  }

  Vec3 unit_vec() {
    Vec3 v;
    do {
      v = vec_normal();
    } while (v.norm() < 1e-6);
    return v.normalized();
  }

  /// Uniform-ish random rotation: exp of a random axis times a random angle.
  Mat3 rotation() {
    return exp_so3(hat(unit_vec() * uniform(0.0, 3.14159265358979323846))).m;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace triad
