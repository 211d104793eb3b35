#include "triad/verify.hpp"

#include "triad/invariants.hpp"
#include "triad/kinematics.hpp"
#include "triad/liegroup.hpp"
#include "triad/precession.hpp"
#include "triad/random.hpp"
#include "triad/sim.hpp"
#include "triad/spin.hpp"

#include <algorithm>
#include <cmath>

namespace triad {

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(const Vec3& got, const Vec3& want) {
  const double scale = want.norm();
  if (scale == 0.0) return got.norm();
  return (got - want).norm() / scale;
}

LorentzTransform random_lorentz(Rng& rng) {
  const Rotation3 r1 = Rotation3::from_matrix(rng.rotation());
  const Vec3 v = rng.unit_vec() * rng.uniform(0.0, 0.9);
  const Rotation3 r2 = Rotation3::from_matrix(rng.rotation());
  return LorentzTransform{lorentz_rotation4(r1).m * lorentz_boost4(v, 1.0).m *
                          lorentz_rotation4(r2).m};
}

}  // namespace

std::vector<CheckResult> verify_isomorphisms(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0x1501ull);

  {  // exp_so3 lands in SO(3,R)
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Mat3 r = exp_so3(hat(rng.vec_normal(2.0))).m;
      worst = std::max(worst,
                       (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(r.determinant() - 1.0));
    }
    out.push_back(make_check("iso.exp_so3_orthogonal", worst, 0.0, 1e-12));
  }

  {  // cos A + i sin A is Hermitian and in SO(3,C)
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Vec3 v = rng.unit_vec() * rng.uniform(0.0, 0.9);
      const CMat3 h = boost_sin_cos(v, 1.0).complex();
      worst = std::max(worst, (h * h.transpose() - CMat3::Identity())
                                  .cwiseAbs()
                                  .maxCoeff());
      worst = std::max(worst, (h - h.adjoint()).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(h.determinant() - std::complex<double>(1.0)));
    }
    out.push_back(make_check("iso.boost_hermitian_so3c", worst, 0.0, 1e-12));
  }

  {  // F is a homomorphism and a bijection with complex_to_lorentz
    double worst_hom = 0.0, worst_rt = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const LorentzTransform l1 = random_lorentz(rng);
      const LorentzTransform l2 = random_lorentz(rng);
      const CMat3 lhs =
          lorentz_to_complex(LorentzTransform{l1.m * l2.m}).m;
      const CMat3 rhs = lorentz_to_complex(l1).m * lorentz_to_complex(l2).m;
      worst_hom = std::max(worst_hom, (lhs - rhs).cwiseAbs().maxCoeff());

      const ComplexRotation3 f = lorentz_to_complex(l1);
      worst_rt = std::max(
          worst_rt, (complex_to_lorentz(f).m - l1.m).cwiseAbs().maxCoeff());
      const ComplexRotation3 c = ComplexRotation3::from_matrix(f.m, 1e-9);
      worst_rt = std::max(
          worst_rt,
          (lorentz_to_complex(complex_to_lorentz(c)).m - c.m).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("iso.homomorphism", worst_hom, 0.0, 1e-10));
    out.push_back(make_check("iso.roundtrip", worst_rt, 0.0, 1e-10));
  }

  {  // Lie-algebra isomorphism preserves brackets
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const CMat4 m1 =
          make_lorentz_algebra(rng.vec_uniform(-1, 1), rng.vec_uniform(-1, 1));
      const CMat4 m2 =
          make_lorentz_algebra(rng.vec_uniform(-1, 1), rng.vec_uniform(-1, 1));
      const CMat3 lhs = algebra_iso(m1 * m2 - m2 * m1);
      const CMat3 i1 = algebra_iso(m1);
      const CMat3 i2 = algebra_iso(m2);
      worst = std::max(worst,
                       (lhs - (i1 * i2 - i2 * i1)).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("iso.algebra_bracket", worst, 0.0, 1e-12));
  }

  {  // gs_split preserves brackets under the componentwise bracket
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const GsAlgebra g1{hat(rng.vec_uniform(-1, 1)), hat(rng.vec_uniform(-1, 1))};
      const GsAlgebra g2{hat(rng.vec_uniform(-1, 1)), hat(rng.vec_uniform(-1, 1))};
      const Mat6 k = g1.matrix() * g2.matrix() - g2.matrix() * g1.matrix();
      const GsAlgebra gk{SkewMat3::from_matrix(k.topLeftCorner<3, 3>()),
                         SkewMat3::from_matrix(k.topRightCorner<3, 3>())};
      const auto [kp, km] = gs_split(gk);
      const auto [p1, m1] = gs_split(g1);
      const auto [p2, m2] = gs_split(g2);
      const Mat3 pp = p1.matrix() * p2.matrix() - p2.matrix() * p1.matrix();
      const Mat3 mm = m1.matrix() * m2.matrix() - m2.matrix() * m1.matrix();
      worst = std::max(worst, (kp.matrix() - pp).cwiseAbs().maxCoeff());
      worst = std::max(worst, (km.matrix() - mm).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("iso.gs_bracket", worst, 0.0, 1e-12));
  }

  {  // z-translations form a one-parameter subgroup
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double a = rng.uniform(-3, 3);
      const double b = rng.uniform(-3, 3);
      const Mat6 lhs = gs_z_translation(a).m * gs_z_translation(b).m;
      worst = std::max(
          worst, (lhs - gs_z_translation(a + b).m).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("iso.gs_one_parameter", worst, 0.0, 1e-12));
  }

  return out;
}

std::vector<CheckResult> verify_boost_equivalence(std::uint64_t seed) {
  Rng rng(seed ^ 0x2502ull);
  const double c = 1.0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Vec3 dr = rng.vec_uniform(-2, 2);
    const double t = rng.uniform(-1, 1);
    const Vec3 v = rng.unit_vec() * rng.uniform(0.0, 0.9);
    const bool self = (i % 2 == 0);
    const auto [rs, rt] = apply_boost_c3(dr, t, v, c, self);

    // Oracle: the velocity-parameterized 4x4 boost mapped back through the
    // group isomorphism, applied to the same complexified input.
    const CMat3 h = lorentz_to_complex(lorentz_boost4(v, c)).m;
    const double gamma = 1.0 / std::sqrt(1.0 - v.squaredNorm() / (c * c));
    const double total_t = t + dr.dot(v) / (c * c) * gamma;
    CVec3 z;
    const Vec3 re = dr + v * total_t;
    const Vec3 im = v.normalized() * c * total_t;
    for (int k = 0; k < 3; ++k) z(k) = std::complex<double>(re(k), im(k));
    CVec3 zt = h * z;
    if (!self) zt /= gamma;
    Vec3 ors, ort;
    for (int k = 0; k < 3; ++k) {
      ors(k) = zt(k).real();
      ort(k) = zt(k).imag();
    }
    worst = std::max(worst, (rs - ors).norm());
    worst = std::max(worst, (rt - ort).norm());
  }
  return {make_check("boost.c3_equivalence", worst, 0.0, 1e-10)};
}

std::vector<CheckResult> verify_invariant_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0x3503ull);
  const double c = 1.0;

  {  // J1, J2 preserved on the sphere configuration, random (r, tau, ds)
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Mat3 frame = rng.rotation();
      const Vec3 t = frame.col(0), n = frame.col(1), b = frame.col(2);
      const double r = rng.uniform(0.5, 3.0);
      const double tau = rng.uniform(-1.0, 1.0);
      const double ds = rng.uniform(0.1, 1.0);
      FrameDifferential f;
      f.dxi = (r * tau * t + b) * ds;
      f.deta = t * ds;
      const JInvariants j0 = j_invariants(f, c);
      const FrameDifferential g =
          apply_basic_property(f, -tau * ds * t, -r * n);
      const JInvariants j1 = j_invariants(g, c);
      worst = std::max(worst, std::abs(j1.j1 - j0.j1));
      worst = std::max(worst, std::abs(j1.j2 - j0.j2));
      // Closed forms of the pre-conversion values.
      worst = std::max(worst,
                       std::abs(j0.j1 - (2.0 + r * r * tau * tau) * ds * ds));
      worst = std::max(worst, std::abs(j0.j2 - r * tau * ds * ds));
    }
    out.push_back(make_check("invariants.sphere_conversion", worst, 0.0, 1e-12));
  }

  {  // worked sphere case r = 2, tau = 0.5, ds = 1
    const Vec3 t(1, 0, 0), n(0, 1, 0), b(0, 0, 1);
    FrameDifferential f;
    f.dxi = (2.0 * 0.5 * t + b);
    f.deta = t;
    const JInvariants j = j_invariants(f, c);
    out.push_back(make_check("invariants.sphere_J1", j.j1, 3.0, 1e-12));
    out.push_back(make_check("invariants.sphere_J2", j.j2, 1.0, 1e-12));
    const FrameDifferential g = apply_basic_property(f, -0.5 * t, -2.0 * n);
    out.push_back(make_check("invariants.sphere_dxi_converted",
                             (g.dxi - b).norm(), 0.0, 1e-12));
    out.push_back(make_check("invariants.sphere_deta_converted",
                             (g.deta - (t + 1.0 * b)).norm(), 0.0, 1e-12));
  }

  {  // circle with Thomas precession, free and blocked variants
    const Vec3 t(0, 1, 0), n(-1, 0, 0), b(0, 0, 1);
    const double r = 2.0, w = 0.3, ds = 1.0;
    const Vec3 vel = r * w * t;
    const Vec3 acc = r * w * w * n;
    const Vec3 w_th = thomas_precession(vel, acc, c);
    const double expected_j1 =
        1.0 + std::pow(1.0 - r * r * w * w / (2 * c * c), 2);

    FrameDifferential free;
    free.dxi = b * ds + w_th / w * ds;
    free.deta = t * ds;
    const JInvariants jf = j_invariants(free, c);
    out.push_back(make_check("invariants.circle_free_J1", jf.j1, expected_j1, 1e-12));
    out.push_back(make_check("invariants.circle_free_J2", jf.j2, 0.0, 1e-12));

    FrameDifferential blocked;
    blocked.deta = t * ds + w_th.cross(-r * n) * (ds / (r * w));
    blocked.dxi = b * ds;
    const JInvariants jb = j_invariants(blocked, c);
    out.push_back(make_check("invariants.circle_blocked_J1", jb.j1, expected_j1, 1e-12));
    out.push_back(make_check("invariants.circle_blocked_J2", jb.j2, 0.0, 1e-12));
  }

  {  // blocked circle with counter-rotation: J2 = 0 and J1 = 1
    const Vec3 t(0, 1, 0), n(-1, 0, 0), b(0, 0, 1);
    const double r = 1.7, ds = 0.6;
    FrameDifferential f;
    f.deta = t * ds;
    f.dxi = Vec3::Zero();  // own rotation cancelled by the counter-rotation
    const FrameDifferential g = apply_basic_property(f, -b * ds / r, -r * n);
    const JInvariants j = j_invariants(g, c);
    out.push_back(make_check("invariants.circle_stop_J1", j.j1, ds * ds, 1e-12));
    out.push_back(make_check("invariants.circle_stop_J2", j.j2, 0.0, 1e-12));
    out.push_back(
        make_check("invariants.circle_stop_deta", g.deta.norm(), 0.0, 1e-12));
  }

  return out;
}

std::vector<CheckResult> verify_zero_spin(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0x4504ull);

  {  // random rigid configurations spun about the resting barycenter
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + static_cast<int>(rng.uniform() * 17.0);
      BodyModel body;
      body.shape = BodyShape::point_set;
      KahanVec3 weighted;
      KahanSum mass;
      for (int i = 0; i < n; ++i) {
        BodyNode node{rng.uniform(0.5, 2.0), rng.vec_uniform(-1, 1)};
        weighted.add(node.mass * node.pos);
        mass.add(node.mass);
        body.nodes.push_back(node);
      }
      const Vec3 shift = weighted.value() / mass.value();
      for (auto& node : body.nodes) node.pos -= shift;

      // Smooth law whose axis direction is stationary at t = 0: cubic Euler
      // angles with zero first and second derivatives, arbitrary jerk.
      EulerAngleLaw law;
      law.psi = ScalarLaw::polynomial({rng.uniform(-kPi, kPi), 0, 0, rng.uniform(-3, 3)});
      law.phi = ScalarLaw::polynomial({rng.uniform(0.2, kPi - 0.2), 0, 0, rng.uniform(-3, 3)});
      const double w0 = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(1.0, 5.0);
      law.chi = ScalarLaw::polynomial(
          {rng.uniform(-kPi, kPi), w0, rng.uniform(-2, 2), rng.uniform(-2, 2)});

      const auto jets = rigid_trajectories(body, law, 0.0, 0.0);
      std::vector<Particle> parts(jets.size());
      double speed = 0.0;
      for (std::size_t i = 0; i < jets.size(); ++i) {
        parts[i] = {body.nodes[i].mass, jets[i]};
        speed = std::max(speed, jets[i].r1.norm());
      }
      const Vec3 v = system_spin_velocity(ParticleSystem::make(std::move(parts)));
      worst = std::max(worst, v.norm() / speed);
    }
    out.push_back(make_check("zerospin.rigid_random", worst, 0.0, 1e-8));
  }

  {  // homogeneous sphere, precessing axis: ring quadrature vanishes
    const BodyModel body = discretize_sphere(1.0, 2.0, 32, 64);
    EulerAngleLaw law;
    law.psi = ScalarLaw::polynomial({0.4, 0.7, 0, 0});
    law.phi = ScalarLaw::constant(0.9);
    law.chi = ScalarLaw::polynomial({0.1, 6.0, 0.3, 0});
    const auto jets = rigid_trajectories(body, law, 0.25, 0.0);
    std::vector<Particle> parts(jets.size());
    double speed = 0.0;
    for (std::size_t i = 0; i < jets.size(); ++i) {
      parts[i] = {body.nodes[i].mass, jets[i]};
      speed = std::max(speed, jets[i].r1.norm());
    }
    const Vec3 v = system_spin_velocity(ParticleSystem::make(std::move(parts)));
    out.push_back(
        make_check("zerospin.sphere_quadrature", v.norm() / speed, 0.0, 1e-10));
  }

  return out;
}

std::vector<CheckResult> verify_averaged_terms() {
  std::vector<CheckResult> out;
  // Operating point chosen so the condition ratio stays below 1e-3 on every
  // particle of the 64x128 shell while all four closed-form terms are
  // exercised (precession + slow spin-down).
  const BodyModel body = discretize_sphere(1.0, 3.0, 64, 128);
  const double w = 300.0, wdot = 5.0, omega = 0.5, phi0 = 0.6;
  const Vec3 g = 9.81 * Vec3(0.3, -0.2, -0.9).normalized();
  const double t = 0.37;

  EulerAngleLaw law;
  law.psi = ScalarLaw::polynomial({0.0, omega, 0, 0});
  law.phi = ScalarLaw::constant(phi0);
  law.chi = ScalarLaw::polynomial({1.234, w, wdot / 2.0, 0});

  const SpinTermBreakdown brute = brute_force_average(body, law, g, t, 0.0);

  AxisState ax;
  ax.b = law.axis(t);
  ax.dbdt = law.axis_rate(t);
  ax.w = law.chi.d1(t);
  ax.dwdt = law.chi.d2(t);
  const SpinTermBreakdown closed = averaged_sphere_velocity(ax, g);

  const auto jets = rigid_trajectories(body, law, t, 0.0);
  std::vector<Particle> parts(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    parts[i] = {body.nodes[i].mass, jets[i]};
  }
  const double ratio =
      condition_ratio(ParticleSystem::make(std::move(parts)), g);
  out.push_back(make_check("averaged.ratio84", ratio, 0.0, 1e-3));

  out.push_back(make_check("averaged.term_I", rel_err(brute.vI, closed.vI),
                           0.0, 0.01));
  const double scale = std::max({closed.vI.norm(), closed.vIII.norm(),
                                 closed.vIV.norm()});
  out.push_back(
      make_check("averaged.term_II", brute.vII.norm() / scale, 0.0, 0.01));
  out.push_back(make_check("averaged.term_III",
                           rel_err(brute.vIII, closed.vIII), 0.0, 0.01));
  out.push_back(make_check("averaged.term_IV", rel_err(brute.vIV, closed.vIV),
                           0.0, 0.01));
  return out;
}

std::vector<CheckResult> verify_predictions() {
  std::vector<CheckResult> out;

  {  // (a) disc on plane: fitted circle radius and angular rate
    const BodyModel body = discretize_disc(0.1, 0.05, 1, 64);
    const double w = 50.0, omega = 2.0, g = 9.81, phi = kPi / 4.0;
    EulerAngleLaw law;
    law.psi = ScalarLaw::polynomial({0.0, omega, 0, 0});
    law.phi = ScalarLaw::constant(phi);
    law.chi = ScalarLaw::polynomial({0.0, w, 0, 0});
    const SimOutput run = run_disc_on_plane(body, law, g, 10.0, 1e-3);
    const double predicted = disc_circle_radius(phi, w, g);
    out.push_back(make_check("predict.disc_radius_rel",
                             std::abs(run.fit->radius - predicted) / predicted,
                             0.0, 0.02));
    out.push_back(make_check("predict.disc_rate_rel",
                             std::abs(run.fit->angular_rate - omega) / omega,
                             0.0, 0.01));
    double worst_dot = 0.0;
    for (const auto& s : run.samples) {
      if (s.spin_v.norm() > 0.0) {
        worst_dot =
            std::max(worst_dot, std::abs(s.spin_v.dot(s.axis_b)) / s.spin_v.norm());
      }
    }
    out.push_back(make_check("predict.disc_v_perp_b", worst_dot, 0.0, 1e-6));
  }

  {  // (b) spin-down displacement
    const BodyModel body = discretize_disc(0.1, 0.05, 1, 64);
    const double w1 = 100.0, w2 = 50.0, g = 10.0, phi = kPi / 4.0;
    const SimOutput run = run_spin_down(body, w1, w2, phi, g, 5.0, 1e-3);
    const double predicted = spin_down_displacement(w1, w2, g, phi);
    out.push_back(make_check(
        "predict.spin_down_L_rel",
        std::abs(run.horizontal_displacement - predicted) / predicted, 0.0,
        0.01));
  }

  {  // (c) free-fall departure along g for phi(t) = phi0 + Omega t
    const BodyModel body = discretize_sphere(0.1, 1.0, 32, 64);
    const double w = 500.0, omega = 2.0, phi0 = 0.3, g_mag = 9.81;
    EulerAngleLaw law;
    law.psi = ScalarLaw::constant(0.0);
    law.phi = ScalarLaw::polynomial({phi0, omega, 0, 0});
    law.chi = ScalarLaw::polynomial({0.0, w, 0, 0});
    GravityContext gctx;
    gctx.g = Vec3(0, 0, -g_mag);
    const SimOutput run = run_free_fall(body, law, gctx, 1.5, 1e-3);
    const Vec3 ghat = gctx.g.normalized();
    const double amplitude = g_mag * omega * omega / (w * w);
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < run.samples.size(); ++k) {
      const auto& s = run.samples[k];
      const double dep_sim = ghat.dot(s.spin_a);
      // -(g / 4 w^2) d^2 cos(2 phi)/dt^2 with phi = phi0 + Omega t.
      const double dep_pred =
          g_mag * omega * omega / (w * w) * std::cos(2 * (phi0 + omega * s.t));
      worst = std::max(worst, std::abs(dep_sim - dep_pred));
    }
    out.push_back(make_check("predict.freefall_departure_rel",
                             worst / amplitude, 0.0, 0.02));
  }

  return out;
}

std::vector<CheckResult> verify_precession(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0x7507ull);
  PpnParams p;
  p.gamma = 1.0;
  p.G = 1.0;
  p.c = 1.0;

  {  // omega_relative == omega_gyro - omega_stars
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const int n = 1 + static_cast<int>(rng.uniform() * 5.0);
      std::vector<GravSource> sources(n);
      for (auto& s : sources) {
        s.mass = rng.uniform(0.1, 2.0);
        s.position = rng.vec_uniform(-5, 5);
        s.velocity = rng.vec_uniform(-0.1, 0.1);
        s.angular_momentum = rng.vec_uniform(-1, 1);
      }
      GyroState gyro;
      gyro.position = rng.vec_uniform(-5, 5) + Vec3(11, 0, 0);
      gyro.velocity = rng.vec_uniform(-0.1, 0.1);
      const Vec3 rel = omega_relative(gyro, sources, p);
      const Vec3 diff =
          omega_gyro(gyro, sources, p) - omega_stars(gyro, sources, p);
      const double scale = std::max(rel.norm(), 1e-300);
      worst = std::max(worst, (rel - diff).norm() / scale);
    }
    out.push_back(make_check("precess.relative_identity", worst, 0.0, 1e-14));
  }

  {  // frame dragging is 3/4 of the gamma = 1 Fermi-Walker value
    GravSource s;
    s.mass = 1.7;
    s.position = Vec3::Zero();
    s.angular_momentum = Vec3(0.3, -1.1, 0.8);
    GyroState gyro;
    gyro.position = Vec3(2.0, 1.0, -0.5);
    const Vec3 rel = omega_relative(gyro, {s}, p);
    const Vec3 fw = omega_fermi_walker(gyro, {s}, p);
    out.push_back(make_check("precess.drag_ratio_three_quarters",
                             (rel - 0.75 * fw).norm(), 0.0, 1e-14 * fw.norm()));
  }

  {  // translation invariance and rotation covariance
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      std::vector<GravSource> sources(2);
      for (auto& s : sources) {
        s.mass = rng.uniform(0.1, 2.0);
        s.position = rng.vec_uniform(-3, 3);
        s.velocity = rng.vec_uniform(-0.1, 0.1);
        s.angular_momentum = rng.vec_uniform(-1, 1);
      }
      GyroState gyro;
      gyro.position = rng.vec_uniform(-3, 3) + Vec3(7, 0, 0);
      gyro.velocity = rng.vec_uniform(-0.1, 0.1);

      const Vec3 base = omega_gyro(gyro, sources, p);

      const Vec3 shift = rng.vec_uniform(-10, 10);
      auto moved = sources;
      for (auto& s : moved) s.position += shift;
      GyroState gyro2 = gyro;
      gyro2.position += shift;
      worst = std::max(worst, (omega_gyro(gyro2, moved, p) - base).norm() /
                                  std::max(base.norm(), 1e-300));

      const Mat3 r = rng.rotation();
      auto rotated = sources;
      for (auto& s : rotated) {
        s.position = r * s.position;
        s.velocity = r * s.velocity;
        s.angular_momentum = r * s.angular_momentum;
      }
      GyroState gyro3;
      gyro3.position = r * gyro.position;
      gyro3.velocity = r * gyro.velocity;
      worst = std::max(worst,
                       (omega_gyro(gyro3, rotated, p) - r * base).norm() /
                           std::max(base.norm(), 1e-300));
    }
    out.push_back(make_check("precess.covariance", worst, 0.0, 1e-12));
  }

  return out;
}

RunReport verify_all(std::uint64_t seed) {
  RunReport rep;
  const auto append = [&rep](std::vector<CheckResult> v) {
    rep.checks.insert(rep.checks.end(), v.begin(), v.end());
  };
  append(verify_isomorphisms(seed));
  append(verify_boost_equivalence(seed));
  append(verify_invariant_suite(seed));
  append(verify_zero_spin(seed));
  append(verify_averaged_terms());
  append(verify_predictions());
  append(verify_precession(seed));
  return rep;
}

}  // namespace triad
