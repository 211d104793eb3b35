#include "triad/precession.hpp"

#include <stdexcept>

namespace triad {

namespace {

struct TermSums {
  Vec3 geodetic{Vec3::Zero()};   // sum (v - v_a) x grad(G m_a / r_a c^2)
  Vec3 dragging{Vec3::Zero()};   // sum G [J_a - 3 n (n.J_a)] / r_a^3 c^2
  Vec3 anomalous{Vec3::Zero()};  // sum v_a x grad(G m_a / r_a c^2)
};

TermSums accumulate(const GyroState& gyro,
                    const std::vector<GravSource>& sources,
                    const PpnParams& p) {
  TermSums sums;
  const double c2 = p.c * p.c;
  for (const auto& s : sources) {
    const Vec3 sep = gyro.position - s.position;
    const double r = sep.norm();
    if (r <= 0.0) {
      throw std::domain_error("precession: gyroscope coincides with a source");
    }
    const Vec3 n = sep / r;
    const Vec3 grad = -p.G * s.mass / (r * r * c2) * n;
    sums.geodetic += (gyro.velocity - s.velocity).cross(grad);
    sums.dragging += p.G *
                     (s.angular_momentum - 3.0 * n * n.dot(s.angular_momentum)) /
                     (r * r * r * c2);
    sums.anomalous += s.velocity.cross(grad);
  }
  return sums;
}

}  // namespace

Vec3 omega_fermi_walker(const GyroState& gyro,
                        const std::vector<GravSource>& sources,
                        const PpnParams& p) {
  const TermSums s = accumulate(gyro, sources, p);
  return (p.gamma + 0.5) * s.geodetic - 0.5 * (p.gamma + 1.0) * s.dragging -
         0.5 * s.anomalous;
}

Vec3 omega_gyro(const GyroState& gyro, const std::vector<GravSource>& sources,
                const PpnParams& p) {
  const TermSums s = accumulate(gyro, sources, p);
  return 2.0 * s.geodetic - s.dragging;
}

Vec3 omega_stars(const GyroState& gyro, const std::vector<GravSource>& sources,
                 const PpnParams& p) {
  const TermSums s = accumulate(gyro, sources, p);
  return 0.5 * s.geodetic - 0.25 * s.dragging;
}

Vec3 omega_relative(const GyroState& gyro,
                    const std::vector<GravSource>& sources,
                    const PpnParams& p) {
  const TermSums s = accumulate(gyro, sources, p);
  return 1.5 * s.geodetic - 0.75 * s.dragging;
}

}  // namespace triad
