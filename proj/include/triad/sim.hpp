// Body discretization, rigid-motion trajectory generation, fixed-step
// integration of the free-fall / disc-on-plane / spin-down scenarios and
// the brute-force oracle for the averaged spin-velocity formulas.
#pragma once

#include "triad/kinematics.hpp"
#include "triad/linalg.hpp"
#include "triad/spin.hpp"

#include <array>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace triad {

enum class BodyShape { sphere, disc, point_set };

struct BodyNode {
  double mass = 0.0;
  Vec3 pos{Vec3::Zero()};  // body frame, barycenter at origin
};

struct BodyModel {
  std::vector<BodyNode> nodes;
  BodyShape shape = BodyShape::point_set;
  double radius = 0.0;

  double total_mass() const;
  Vec3 barycenter() const;
  /// Moment of inertia about an axis through the barycenter.
  double moment_of_inertia(const Vec3& axis) const;
};

/// Ring-quadrature discretization of a spinning spherical shell: equal-area
/// z-slices, equal-mass nodes, antipodal node pairs generated by exact
/// negation so the barycenter vanishes identically.
BodyModel discretize_sphere(double radius, double mass, int n_rings,
                            int n_per_ring);

/// Flat disc as annulus-weighted rings; n_radii = 1 gives the hoop mode with
/// the whole mass at the rim radius.
BodyModel discretize_disc(double radius, double mass, int n_radii,
                          int n_per_ring);

/// Scalar function of time with three derivatives.
struct ScalarLaw {
  std::function<double(double)> f, d1, d2, d3;

  static ScalarLaw constant(double v);
  /// c0 + c1 t + c2 t^2 + c3 t^3.
  static ScalarLaw polynomial(const std::array<double, 4>& c);
};

/// Euler z-y-z motion law A(t) = Rz(psi) Ry(phi) Rz(chi): spin at rate
/// chi'(t) about the axis b = (sin phi cos psi, sin phi sin psi, cos phi),
/// with the axis itself steered by psi(t), phi(t).  Jets are analytic.
struct EulerAngleLaw {
  ScalarLaw psi = ScalarLaw::constant(0.0);
  ScalarLaw phi = ScalarLaw::constant(0.0);
  ScalarLaw chi = ScalarLaw::constant(0.0);

  Mat3 rotation(double t) const;
  Vec3 axis(double t) const;
  Vec3 axis_rate(double t) const;
  /// Angular velocity and its first two derivatives.
  void angular_state(double t, Vec3& w, Vec3& wp, Vec3& wpp) const;
};

/// Arbitrary rotation history; jets are extracted by central finite
/// differences of the matrix with the given step.
struct GenericRotationLaw {
  std::function<Mat3(double)> rotation;
  double fd_step = 1e-5;
};

using MotionLaw = std::variant<EulerAngleLaw, GenericRotationLaw>;

Mat3 law_rotation(const MotionLaw& law, double t);

/// Per-particle jets of t -> A(t) x_body.  h is the finite-difference step
/// for generic laws; parameterized laws use exact derivatives.
std::vector<CurveJet> rigid_trajectories(const BodyModel& body,
                                         const MotionLaw& law, double t,
                                         double h);

/// Mass-averaged d(ln k)/dt over the body by finite differences of the
/// per-particle curvature; feeds AxisState::curvature_flow for bodies that
/// are not axisymmetric about the spin axis.
double curvature_flow_average(const BodyModel& body, const MotionLaw& law,
                              double t, double h);

struct SimSample {
  double t = 0.0;
  Vec3 pos{Vec3::Zero()};     // barycenter including spin displacement
  Vec3 spin_v{Vec3::Zero()};  // V(t)
  Vec3 spin_a{Vec3::Zero()};  // dV/dt
  double ratio84 = 0.0;       // condition ratio at this sample
  Vec3 axis_b{0, 0, 1};
};

struct CircleFit {
  double cx = 0.0, cy = 0.0;
  double radius = 0.0;
  double angular_rate = 0.0;  // rad/s, signed
  double rms = 0.0;           // radial residual
};

struct SimOutput {
  std::vector<SimSample> samples;
  double h = 0.0;
  bool ratio_exceeded = false;  // condition ratio went above 1
  double horizontal_displacement = 0.0;
  std::optional<CircleFit> fit;
};

/// Free fall of a spinning body: the barycenter obeys x'' = g while the spin
/// velocity from the full particle sum is applied as a displacement rate
/// (x' = v + V).  dV/dt is reported separately in the samples as the
/// measurable departure.  Fixed-step RK4.
SimOutput run_free_fall(const BodyModel& body, const MotionLaw& law,
                        const GravityContext& gctx, double t_end, double h);

/// Spinning body on a horizontal plane: the barycenter moves in the xy-plane
/// with velocity equal to the horizontal projection of the averaged spin
/// velocity; the output includes a least-squares circle fit of the path.
/// Requires a parameterized (Euler) law.
SimOutput run_disc_on_plane(const BodyModel& body, const MotionLaw& law,
                            double g_mag, double t_end, double h);

/// Prescribed spin-down from w1 to w2 about a fixed axis inclined at phi to
/// the horizontal plane; integrates the constant-axis spin velocity and
/// reports the total horizontal displacement.
SimOutput run_spin_down(const BodyModel& body, double w1, double w2,
                        double phi, double g_mag, double t_end, double h);

/// Mass-weighted sum of the four-term decomposition over the discretized
/// body at time t: the oracle against averaged_sphere_velocity.
SpinTermBreakdown brute_force_average(const BodyModel& body,
                                      const MotionLaw& law, const Vec3& g,
                                      double t, double h);

/// Algebraic least-squares circle through the xy-projection of the samples,
/// plus the fitted angular rate of motion around its center.
CircleFit fit_circle_xy(const std::vector<SimSample>& samples);

}  // namespace triad
