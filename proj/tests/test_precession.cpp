#include "triad/precession.hpp"
#include "triad/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace triad;

namespace {

PpnParams natural() {
  PpnParams p;
  p.gamma = 1.0;
  p.G = 1.0;
  p.c = 1.0;
  return p;
}

}  // namespace

TEST_CASE("static configurations precess nothing") {
  GravSource s;
  s.mass = 2.0;
  s.position = Vec3(1, 0, 0);
  GyroState gyro;
  gyro.position = Vec3(-1, 0, 0);
  const PpnParams p = natural();
  CHECK(omega_fermi_walker(gyro, {s}, p).norm() == 0.0);
  CHECK(omega_gyro(gyro, {s}, p).norm() == 0.0);
  CHECK(omega_stars(gyro, {s}, p).norm() == 0.0);
  CHECK(omega_relative(gyro, {s}, p).norm() == 0.0);
}

TEST_CASE("geodetic term of a single static source") {
  // Only the gyroscope moves: omega_fw = (gamma + 1/2) v x grad(Gm/r c^2).
  const PpnParams p = natural();
  GravSource s;
  s.mass = 3.0;
  s.position = Vec3::Zero();
  GyroState gyro;
  gyro.position = Vec3(2, 0, 0);
  gyro.velocity = Vec3(0, 0.1, 0);

  const Vec3 n(1, 0, 0);
  const Vec3 grad = -s.mass * n / 4.0;  // G = c = 1
  const Vec3 expected_fw = 1.5 * gyro.velocity.cross(grad);
  CHECK((omega_fermi_walker(gyro, {s}, p) - expected_fw).norm() < 1e-15);
  const Vec3 expected_gyro = 2.0 * gyro.velocity.cross(grad);
  CHECK((omega_gyro(gyro, {s}, p) - expected_gyro).norm() < 1e-15);
}

TEST_CASE("frame-dragging term of a pure-spin source") {
  const PpnParams p = natural();
  GravSource s;
  s.mass = 1.0;
  s.position = Vec3::Zero();
  s.angular_momentum = Vec3(0.4, -0.2, 0.9);
  GyroState gyro;
  gyro.position = Vec3(0, 0, 2);

  const Vec3 n(0, 0, 1);
  const Vec3 j = s.angular_momentum;
  const Vec3 expected = -(j - 3.0 * n * n.dot(j)) / 8.0;  // r^3 = 8
  CHECK((omega_gyro(gyro, {s}, p) - expected).norm() < 1e-15);
  // stars carries 1/4 of the gyro coefficient.
  CHECK((omega_stars(gyro, {s}, p) - 0.25 * expected).norm() < 1e-15);
}

TEST_CASE("linearity") {
  const PpnParams p = natural();
  Rng rng(51);
  std::vector<GravSource> sources(3);
  for (auto& s : sources) {
    s.mass = rng.uniform(0.5, 2.0);
    s.position = rng.vec_uniform(-3, 3);
    s.velocity = rng.vec_uniform(-0.1, 0.1);
    s.angular_momentum = rng.vec_uniform(-1, 1);
  }
  GyroState gyro;
  gyro.position = Vec3(10, 0, 0);
  gyro.velocity = Vec3(0, 0.05, 0);

  SUBCASE("doubling all masses doubles the pure-spin result") {
    GravSource s = sources[0];
    s.velocity = Vec3::Zero();
    GyroState still;
    still.position = gyro.position;
    auto doubled = s;
    doubled.mass *= 2.0;
    doubled.angular_momentum *= 2.0;  // J scales with mass
    const Vec3 a = omega_gyro(still, {s}, p);
    const Vec3 b = omega_gyro(still, {doubled}, p);
    CHECK((b - 2.0 * a).norm() < 1e-15 * std::max(1.0, b.norm()));
  }
  SUBCASE("removing a source subtracts exactly its contribution") {
    const Vec3 all = omega_gyro(gyro, sources, p);
    const Vec3 without =
        omega_gyro(gyro, {sources[0], sources[1]}, p);
    const Vec3 alone = omega_gyro(gyro, {sources[2]}, p);
    CHECK((all - without - alone).norm() < 1e-14 * std::max(1.0, all.norm()));
  }
}

TEST_CASE("relative precession identity") {
  const PpnParams p = natural();
  Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    std::vector<GravSource> sources(1 + static_cast<int>(rng.uniform() * 4));
    for (auto& s : sources) {
      s.mass = rng.uniform(0.1, 2.0);
      s.position = rng.vec_uniform(-5, 5);
      s.velocity = rng.vec_uniform(-0.1, 0.1);
      s.angular_momentum = rng.vec_uniform(-1, 1);
    }
    GyroState gyro;
    gyro.position = rng.vec_uniform(-5, 5) + Vec3(12, 0, 0);
    gyro.velocity = rng.vec_uniform(-0.1, 0.1);
    const Vec3 rel = omega_relative(gyro, sources, p);
    const Vec3 diff =
        omega_gyro(gyro, sources, p) - omega_stars(gyro, sources, p);
    CHECK((rel - diff).norm() <= 1e-14 * std::max(rel.norm(), 1e-300));
  }
}

TEST_CASE("fermi-walker anomalous term") {
  // With gamma = 1 the difference from omega_gyro is the coefficient shift
  // on the geodetic/dragging sums plus the -1/2 sum of v_a x grad terms.
  const PpnParams p = natural();
  Rng rng(53);
  std::vector<GravSource> sources(2);
  for (auto& s : sources) {
    s.mass = rng.uniform(0.5, 2.0);
    s.position = rng.vec_uniform(-2, 2);
    s.velocity = rng.vec_uniform(-0.2, 0.2);
    s.angular_momentum = rng.vec_uniform(-1, 1);
  }
  GyroState gyro;
  gyro.position = Vec3(6, 1, -2);
  gyro.velocity = Vec3(0.1, -0.05, 0.02);

  Vec3 geo = Vec3::Zero(), drag = Vec3::Zero(), anom = Vec3::Zero();
  for (const auto& s : sources) {
    const Vec3 sep = gyro.position - s.position;
    const double r = sep.norm();
    const Vec3 n = sep / r;
    const Vec3 grad = -s.mass * n / (r * r);
    geo += (gyro.velocity - s.velocity).cross(grad);
    drag += (s.angular_momentum - 3.0 * n * n.dot(s.angular_momentum)) /
            (r * r * r);
    anom += s.velocity.cross(grad);
  }
  const Vec3 expected = 1.5 * geo - drag - 0.5 * anom;
  CHECK((omega_fermi_walker(gyro, sources, p) - expected).norm() <
        1e-15 * std::max(1.0, expected.norm()));
}

TEST_CASE("gyroscope at a source position throws") {
  GravSource s;
  s.mass = 1.0;
  s.position = Vec3(1, 2, 3);
  GyroState gyro;
  gyro.position = Vec3(1, 2, 3);
  CHECK_THROWS_AS(omega_gyro(gyro, {s}, natural()), std::domain_error);
}
