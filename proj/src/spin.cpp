#include "triad/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace triad {

namespace {

/// One summand of the system spin-velocity formula from the shifted jets.
/// Returns zero when |v1 x v2| vanishes (straight-line/degenerate particle).
Vec3 spin_term(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  const Vec3 cross = v1.cross(v2);
  const double cn2 = cross.squaredNorm();
  if (cn2 <= 0.0) {
    return Vec3::Zero();
  }
  const double n1_4 = v1.squaredNorm() * v1.squaredNorm();
  return n1_4 * cross.dot(v3) / (cn2 * cn2) * cross;
}

}  // namespace

ParticleSystem ParticleSystem::make(std::vector<Particle> particles) {
  if (particles.empty()) {
    throw std::invalid_argument("ParticleSystem: no particles");
  }
  KahanSum mass;
  KahanVec3 momentum;
  for (const auto& p : particles) {
    if (!(p.mass > 0.0)) {
      throw std::invalid_argument("ParticleSystem: nonpositive mass");
    }
    mass.add(p.mass);
    momentum.add(p.mass * p.jet.r1);
  }
  ParticleSystem sys;
  sys.particles = std::move(particles);
  sys.u = momentum.value() / mass.value();
  return sys;
}

void ParticleSystem::validate() const {
  const ParticleSystem fresh = make(particles);
  const double scale = std::max(fresh.u.norm(), 1.0e-300);
  if ((u - fresh.u).norm() > 1e-10 * std::max(1.0, scale)) {
    throw std::invalid_argument(
        "ParticleSystem: stored u disagrees with the barycenter velocity");
  }
}

void AxisState::validate() const {
  if (std::abs(b.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("AxisState: b not a unit vector");
  }
  if (std::abs(b.dot(dbdt)) > 1e-8 * std::max(1.0, dbdt.norm())) {
    throw std::invalid_argument("AxisState: dbdt not orthogonal to b");
  }
}

Vec3 spin_displacement_rate(const FrenetFrame& frame, const Vec3& r_vec) {
  return -frame.tau * frame.t.cross(r_vec);
}

Vec3 particle_spin_velocity(const FrenetFrame& frame) {
  // db/ds = -tau n, so db/dt . n = -tau s_rate.
  const double dbdt_dot_n = -frame.tau * frame.s_rate;
  return -dbdt_dot_n / frame.k * frame.b;
}

Vec3 system_spin_velocity(const ParticleSystem& sys) {
  return system_spin_velocity_gravity(sys, GravityContext{});
}

Vec3 system_spin_velocity_gravity(const ParticleSystem& sys,
                                  const GravityContext& gctx) {
  if (sys.particles.empty()) {
    throw std::invalid_argument("system_spin_velocity: no particles");
  }
  KahanVec3 acc;
  KahanSum mass;
  for (const auto& p : sys.particles) {
    acc.add(p.mass * spin_term(p.jet.r1 - sys.u, p.jet.r2 - gctx.g,
                               p.jet.r3 - gctx.g1));
    mass.add(p.mass);
  }
  return acc.value() / mass.value();
}

double condition_ratio(const ParticleSystem& sys, const Vec3& g) {
  double worst = 0.0;
  for (const auto& p : sys.particles) {
    const Vec3 v1 = p.jet.r1 - sys.u;
    const double denom = v1.cross(p.jet.r2).norm();
    if (denom > 0.0) {
      worst = std::max(worst, v1.cross(g).norm() / denom);
    }
  }
  return worst;
}

SpinTermBreakdown decompose_terms(const CurveJet& jet, const Vec3& g) {
  SpinTermBreakdown out;
  const Vec3 cross = jet.r1.cross(jet.r2);
  const double cn2 = cross.squaredNorm();
  if (cn2 <= 0.0) {
    return out;
  }
  const double cn4 = cn2 * cn2;
  const double n1_4 = jet.r1.squaredNorm() * jet.r1.squaredNorm();
  const double triple = cross.dot(jet.r3);
  const Vec3 g_cross = jet.r1.cross(g);
  const double g_dot = g.dot(jet.r1.cross(jet.r3));
  out.vI = g_dot * n1_4 / cn4 * cross;
  out.vII = -g_dot * n1_4 / cn4 * g_cross;
  out.vIII = -triple * n1_4 / cn4 * g_cross;
  out.vIV = 4.0 * triple * n1_4 * cross.dot(g_cross) / (cn4 * cn2) * cross;
  out.total = out.vI + out.vII + out.vIII + out.vIV;
  return out;
}

SpinTermBreakdown averaged_sphere_velocity(const AxisState& axis,
                                           const Vec3& g) {
  if (!(axis.w > 0.0)) {
    throw std::domain_error("averaged_sphere_velocity: w must be positive");
  }
  const double w2 = axis.w * axis.w;
  const double w3 = w2 * axis.w;
  SpinTermBreakdown out;
  out.vI = (axis.dbdt.dot(g) / w2) * axis.b +
           (3.0 / w3) * g.dot(axis.b) * axis.dwdt * axis.b -
           (2.0 / w2) * g.dot(axis.b) * axis.curvature_flow * axis.b;
  out.vII = Vec3::Zero();
  out.vIII = g.cross(axis.b.cross(axis.dbdt)) / (2.0 * w2);
  out.vIV = (-2.0 / w2) * axis.dbdt.dot(g) * axis.b;
  out.total = out.vI + out.vII + out.vIII + out.vIV;
  return out;
}

double newton_departure(const AxisState& axis, const Vec3& g,
                        const std::function<double(double)>& phi_law, double t,
                        double h) {
  const double g_mag = g.norm();
  const double w2 = axis.w * axis.w;
  const double c_p = std::cos(2.0 * phi_law(t + h));
  const double c_0 = std::cos(2.0 * phi_law(t));
  const double c_m = std::cos(2.0 * phi_law(t - h));
  const double d2 = (c_p - 2.0 * c_0 + c_m) / (h * h);
  return -g_mag / (4.0 * w2) * d2;
}

double disc_circle_radius(double phi, double w, double g_mag) {
  if (w == 0.0) {
    throw std::domain_error("disc_circle_radius: w must be nonzero");
  }
  return g_mag * std::abs(std::sin(2.0 * phi)) / (4.0 * w * w);
}

double spin_down_displacement(double w1, double w2, double g_mag, double phi) {
  if (w1 == 0.0 || w2 == 0.0 || w1 * w2 < 0.0) {
    throw std::domain_error(
        "spin_down_displacement: w1, w2 must be nonzero with equal signs");
  }
  return 1.5 * g_mag * (1.0 / (w2 * w2) - 1.0 / (w1 * w1)) * std::sin(phi) *
         std::cos(phi);
}

Vec3 axis_fixed_spin_velocity(const AxisState& axis, const Vec3& g) {
  const double w3 = axis.w * axis.w * axis.w;
  return (3.0 / w3) * g.dot(axis.b) * axis.dwdt * axis.b;
}

double spin_energy(double m, const Vec3& V) {
  if (!(m > 0.0)) {
    throw std::invalid_argument("spin_energy: mass must be positive");
  }
  return 0.5 * m * V.squaredNorm();
}

double total_kinetic_energy(double m, const Vec3& v, const Vec3& V) {
  return 0.5 * m * v.squaredNorm() + 0.5 * m * V.squaredNorm();
}

double lambda_coefficient(double A) {
  if (!(A > 0.0)) {
    throw std::domain_error("lambda_coefficient: A must be positive");
  }
  const double inv_a = 1.0 / A;
  const auto integrand = [inv_a](double x) {
    const double q = 1.0 + (std::cos(x) + inv_a) * (std::cos(x) + inv_a);
    return 1.0 / (q * q);
  };
  // Periodic smooth integrand: the trapezoid rule converges geometrically
  // under node doubling.
  const double two_pi = 2.0 * 3.14159265358979323846;
  int n = 16;
  double prev = 0.0;
  for (int k = 0; k < n; ++k) prev += integrand(two_pi * k / n);
  prev *= two_pi / n;
  for (int iter = 0; iter < 24; ++iter) {
    // Add the midpoints of the current grid.
    double mid = 0.0;
    for (int k = 0; k < n; ++k) mid += integrand(two_pi * (k + 0.5) / n);
    const double next = 0.5 * prev + mid * two_pi / (2 * n);
    n *= 2;
    if (std::abs(next - prev) <= 1e-9 * std::abs(next)) {
      prev = next;
      break;
    }
    prev = next;
  }
  const double a4 = A * A * A * A;
  return prev / (two_pi * a4);
}

}  // namespace triad
