// Gyroscope-axis precession formulas for N gravitating sources: the
// Fermi-Walker form, the locally observed form, the apparent precession of
// the distant stars and their difference.
#pragma once

#include "triad/linalg.hpp"

#include <vector>

namespace triad {

struct GravSource {
  double mass = 0.0;          // kg
  Vec3 position{Vec3::Zero()};
  Vec3 velocity{Vec3::Zero()};
  Vec3 angular_momentum{Vec3::Zero()};  // kg m^2 / s
};

struct GyroState {
  Vec3 position{Vec3::Zero()};
  Vec3 velocity{Vec3::Zero()};
};

struct PpnParams {
  double gamma = 1.0;
  double G = 6.67430e-11;  // m^3 / (kg s^2)
  double c = 299792458.0;  // m/s
};

/// Fermi-Walker angular velocity of the gyroscope axis:
///   (gamma + 1/2) sum (v - v_a) x grad(G m_a / r_a c^2)
///   - (1/2)(gamma + 1) sum G [J_a - 3 n (n.J_a)] / r_a^3 c^2
///   - (1/2) sum v_a x grad(G m_a / r_a c^2),
/// with grad evaluated at the gyroscope: grad(1/r_a) = -n_a / r_a^2 and n_a
/// the unit vector from source a toward the gyroscope.
/// Throws std::domain_error when the gyroscope coincides with a source.
Vec3 omega_fermi_walker(const GyroState& gyro,
                        const std::vector<GravSource>& sources,
                        const PpnParams& p);

/// Precession observed close to the gyroscope: coefficients 2 (geodetic)
/// and 1 (frame dragging), no anomalous velocity term.
Vec3 omega_gyro(const GyroState& gyro, const std::vector<GravSource>& sources,
                const PpnParams& p);

/// Apparent precession of the distant stars: coefficients 1/2 and 1/4.
Vec3 omega_stars(const GyroState& gyro, const std::vector<GravSource>& sources,
                 const PpnParams& p);

/// Relative precession of the gyroscope axis with respect to the distant
/// stars: coefficients 3/2 and 3/4; equals omega_gyro - omega_stars exactly.
Vec3 omega_relative(const GyroState& gyro,
                    const std::vector<GravSource>& sources,
                    const PpnParams& p);

}  // namespace triad
