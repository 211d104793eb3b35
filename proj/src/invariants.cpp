#include "triad/invariants.hpp"

#include <cmath>

namespace triad {

JInvariants j_invariants(const FrameDifferential& f, double c) {
  JInvariants j;
  j.j1 = f.dxi.squaredNorm() + f.deta.squaredNorm() -
         c * c * f.dtheta.squaredNorm();
  j.j2 = f.dxi.dot(f.deta);
  j.j3 = f.dxi.dot(f.dtheta);
  j.j4 = f.deta.dot(f.dtheta);
  return j;
}

FrameDifferential apply_basic_property(const FrameDifferential& f,
                                       const Vec3& unpermitted,
                                       const Vec3& r_vec) {
  FrameDifferential out = f;
  out.deta = f.deta + unpermitted.cross(r_vec);
  out.dxi = f.dxi + r_vec.norm() * unpermitted;
  return out;
}

double generalized_line_element(double ds, double V, double dt, double c) {
  return ds * ds + V * V * dt * dt - c * c * dt * dt;
}

OrthogonalityReport temporal_orthogonality_check(const FrameDifferential& f) {
  const double th = f.dtheta.norm();
  OrthogonalityReport rep;
  rep.j3_zero =
      std::abs(f.dxi.dot(f.dtheta)) < 1e-12 * std::max(1e-300, f.dxi.norm() * th);
  rep.j4_zero = std::abs(f.deta.dot(f.dtheta)) <
                1e-12 * std::max(1e-300, f.deta.norm() * th);
  return rep;
}

}  // namespace triad
