// Spin displacement, spin velocity and spin acceleration: per-particle
// formulas, mass-weighted system sums (with and without gravity), the
// four-term gravitational decomposition, the averaged closed forms for
// axisymmetric spinning bodies and the measurable predictions derived
// from them.
#pragma once

#include "triad/kinematics.hpp"
#include "triad/linalg.hpp"

#include <functional>
#include <vector>

namespace triad {

struct Particle {
  double mass = 0.0;  // kg, > 0
  CurveJet jet;
};

/// Ordered particle list plus the barycenter velocity u = sum(m r')/sum(m).
/// Particles are always summed in storage order with compensated
/// accumulation, so results are bit-reproducible.
struct ParticleSystem {
  std::vector<Particle> particles;
  Vec3 u{Vec3::Zero()};

  /// Computes u from the particles.  Throws on empty input or m <= 0.
  static ParticleSystem make(std::vector<Particle> particles);

  /// Checks that the stored u matches the recomputed barycenter velocity to
  /// 1e-10 relative.
  void validate() const;
};

struct GravityContext {
  Vec3 g{Vec3::Zero()};   // m/s^2
  Vec3 g1{Vec3::Zero()};  // dg/dt, m/s^3
};

/// The four spin-velocity contributions linear in the gravitational field,
/// plus their sum.
struct SpinTermBreakdown {
  Vec3 vI{Vec3::Zero()};
  Vec3 vII{Vec3::Zero()};
  Vec3 vIII{Vec3::Zero()};
  Vec3 vIV{Vec3::Zero()};
  Vec3 total{Vec3::Zero()};
};

/// Axis description of an axisymmetric spinning body: unit spin axis b,
/// angular speed w and their rates.  curvature_flow is the mass-averaged
/// d(ln k)/dt over the body, zero for an axisymmetric body spinning about
/// its own axis.
struct AxisState {
  Vec3 b{0, 0, 1};
  double w = 0.0;  // rad/s
  Vec3 dbdt{Vec3::Zero()};
  double dwdt = 0.0;
  double curvature_flow = 0.0;  // 1/s

  /// Checks |b| = 1 (1e-10) and b . dbdt = 0 (1e-8).
  void validate() const;
};

/// Spin displacement per unit arc length, dL/ds = -tau t x r_vec, where
/// r_vec points from the osculating-circle center to the particle.
/// For r_vec = -(1/k) n this reduces to (tau/k) b.
Vec3 spin_displacement_rate(const FrenetFrame& frame, const Vec3& r_vec);

/// Per-particle spin velocity -(db/dt . n)(1/k) b with db/dt = (db/ds) s_rate
/// taken from the Frenet relation db/ds = -tau n.
Vec3 particle_spin_velocity(const FrenetFrame& frame);

/// Mass-weighted spin velocity of the system,
///   sum_i |r'_i - u|^4 (r'_i-u, r''_i, r'''_i) ((r'_i-u) x r''_i) m_i
///        / (|(r'_i-u) x r''_i|^4 sum_j m_j).
/// Degenerate particles contribute zero.  Throws on an empty system.
Vec3 system_spin_velocity(const ParticleSystem& sys);

/// Same sum with r'' - g and r''' - g' substituted; identical code path, so
/// g = g' = 0 reproduces system_spin_velocity bit for bit.
Vec3 system_spin_velocity_gravity(const ParticleSystem& sys,
                                  const GravityContext& gctx);

/// Validity ratio of the four-term split: max over particles of
/// |(r'-u) x g| / |(r'-u) x r''|.  The split is a good approximation when
/// this is small.
double condition_ratio(const ParticleSystem& sys, const Vec3& g);

/// The four per-particle spin-velocity terms linear in g (barycenter frame,
/// u = 0 assumed).  Degenerate jets give zeros.
SpinTermBreakdown decompose_terms(const CurveJet& jet, const Vec3& g);

/// Averaged spin velocity of an axisymmetric spinning body:
///   vI   = (db/dt . g) b / w^2 + 3 (g.b)(dw/dt) b / w^3
///          - 2 (g.b) curvature_flow b / w^2
///   vII  = 0
///   vIII = g x (b x db/dt) / (2 w^2)
///   vIV  = -2 (db/dt . g) b / w^2
/// Throws std::domain_error for w <= 0.
SpinTermBreakdown averaged_sphere_velocity(const AxisState& axis,
                                           const Vec3& g);

/// Departure of the free-fall acceleration along g for a spinning sphere at
/// constant w: (g/|g|) . dV/dt = -(g/4w^2) d^2(cos 2 phi)/dt^2, with phi(t)
/// the angle between the spin axis and g.  The second derivative is taken by
/// central differences with step h.
double newton_departure(const AxisState& axis, const Vec3& g,
                        const std::function<double(double)>& phi_law, double t,
                        double h = 1e-5);

/// Radius of the circle traced by a spinning body on a horizontal plane:
/// g |sin 2 phi| / (4 w^2).  Throws for w = 0.
double disc_circle_radius(double phi, double w, double g_mag);

/// Horizontal spin displacement while the angular speed falls from w1 to w2:
/// L = (3/2) g (w2^-2 - w1^-2) sin(phi) cos(phi).  Throws when w1, w2 are
/// zero or of opposite sign.
double spin_down_displacement(double w1, double w2, double g_mag, double phi);

/// Spin velocity at constant axis and curvature: (3/w^3)(g.b)(dw/dt) b.
Vec3 axis_fixed_spin_velocity(const AxisState& axis, const Vec3& g);

/// Energy obtained by spin motion from rest up to V: m |V|^2 / 2.
double spin_energy(double m, const Vec3& V);

/// Total kinetic energy of a body with ordinary velocity v and spin velocity
/// V: m|v|^2/2 + m|V|^2/2 (not m|v+V|^2/2).
double total_kinetic_energy(double m, const Vec3& v, const Vec3& V);

/// Mean slow-spin correction coefficient of a disc at phi = pi/4:
///   lambda(A) = (1/2 pi A^4) * integral_0^2pi dx / [1 + (cos x + 1/A)^2]^2,
/// evaluated by node-doubling trapezoid quadrature to 1e-8 relative error.
/// Throws for A <= 0.
double lambda_coefficient(double A);

}  // namespace triad
