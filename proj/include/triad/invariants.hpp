// Structural invariants J1..J4 of the space x space-rotation x time
// differentials, the rotation -> displacement conversion bookkeeping and the
// generalized line element.
#pragma once

#include "triad/linalg.hpp"

namespace triad {

/// Differential triple: dxi the space-rotation differential (stored in
/// length units, i.e. pre-multiplied by the lever radius), deta the space
/// displacement, dtheta the temporal differential.
struct FrameDifferential {
  Vec3 dxi{Vec3::Zero()};
  Vec3 deta{Vec3::Zero()};
  Vec3 dtheta{Vec3::Zero()};
};

struct JInvariants {
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;
  double j4 = 0.0;
};

/// J1 = |dxi|^2 + |deta|^2 - c^2 |dtheta|^2, J2 = dxi . deta,
/// J3 = dxi . dtheta, J4 = deta . dtheta.
JInvariants j_invariants(const FrameDifferential& f, double c);

/// Converts a blocked infinitesimal rotation into a space displacement:
/// the displacement gains (unpermitted x r_vec), the rotation differential
/// gains the length-scaled rotation |r_vec| * unpermitted, dtheta is
/// untouched.  unpermitted is in angle units; r_vec points from the
/// osculating-circle center to the particle.
FrameDifferential apply_basic_property(const FrameDifferential& f,
                                       const Vec3& unpermitted,
                                       const Vec3& r_vec);

/// Generalized space-time element (dS)^2 = ds^2 + V^2 dt^2 - c^2 dt^2.
double generalized_line_element(double ds, double V, double dt, double c);

struct OrthogonalityReport {
  bool j3_zero = false;
  bool j4_zero = false;
};

/// Reports whether dtheta is orthogonal to dxi (J3) and deta (J4) at
/// tolerance 1e-12 relative to the factor norms.
OrthogonalityReport temporal_orthogonality_check(const FrameDifferential& f);

}  // namespace triad
