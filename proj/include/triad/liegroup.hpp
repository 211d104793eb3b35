// Exact small-matrix algebra for SO(3,R), SO(3,C), the unit component of the
// Lorentz group and the 6-dimensional group over space x space-rotations,
// including the isomorphisms between them.
//
// Convention: the temporal coordinate is imaginary (ict), so Lorentz matrices
// are complex orthogonal 4x4 matrices (M^T M = I with the plain transpose)
// with a real spatial block, imaginary mixed space/time entries and a real
// corner entry >= 1 on the unit component.
#pragma once

#include "triad/linalg.hpp"

#include <complex>
#include <utility>

namespace triad {

/// Element of SO(3,R): orthogonal, det +1.
struct Rotation3 {
  Mat3 m{Mat3::Identity()};

  static Rotation3 from_matrix(const Mat3& m, double tol = 1e-12);
  Rotation3 inverse() const { return Rotation3{m.transpose()}; }
};

/// Rodrigues closed form for exp of an antisymmetric matrix.  The result is
/// orthogonal with determinant +1 to machine precision for any finite input.
Rotation3 exp_so3(const SkewMat3& m);

/// Element of SO(3,C): m m^T = I with the plain (non-conjugating) transpose,
/// det m = +1.  Hermitian elements of this group encode boosts.
struct ComplexRotation3 {
  CMat3 m{CMat3::Identity()};

  static ComplexRotation3 from_matrix(const CMat3& m, double tol = 1e-12);
  bool is_hermitian(double tol = 1e-12) const;
};

/// Unit-component Lorentz transformation in the ict representation.
struct LorentzTransform {
  CMat4 m{CMat4::Identity()};

  static LorentzTransform from_matrix(const CMat4& m, double tol = 1e-12);
};

/// Element of the 6-dimensional group G_s: orthogonal with block structure
/// [[P, Q], [Q, P]].
struct GsElement {
  Mat6 m{Mat6::Identity()};

  static GsElement from_matrix(const Mat6& m, double tol = 1e-12);
  Mat3 p_block() const { return m.topLeftCorner<3, 3>(); }
  Mat3 q_block() const { return m.topRightCorner<3, 3>(); }
};

/// Lie algebra element of G_s: the 6x6 block matrix [[C, B], [B, C]] with
/// C, B antisymmetric.
struct GsAlgebra {
  SkewMat3 c;
  SkewMat3 b;

  Mat6 matrix() const;
};

/// Complexified G_s algebra: the blocks become C+B+iT and C-B+iT, with T the
/// temporal/velocity block.
struct ComplexGsAlgebra {
  SkewMat3 c;
  SkewMat3 b;
  SkewMat3 t;

  std::pair<CMat3, CMat3> split() const;
};

/// Boost trig pair: sin A per the antisymmetric velocity matrix with its
/// leading -1/(c sqrt(1 - v^2/c^2)) factor, cos A the symmetric companion.
/// cos A + i sin A is a Hermitian element of SO(3,C).
struct BoostTrig {
  SkewMat3 sin_a;
  Mat3 cos_a{Mat3::Identity()};

  CMat3 complex() const {
    return cos_a.cast<std::complex<double>>() +
           std::complex<double>(0.0, 1.0) * sin_a.matrix().cast<std::complex<double>>();
  }
};

/// (sin A, cos A) of the boost with velocity v, |v| < c.  With gamma the
/// Lorentz factor, vee(sin A) = gamma v / c and cos A = gamma I - u u^T/(1+gamma)
/// with u = gamma v / c.  Throws std::domain_error at or above light speed.
BoostTrig boost_sin_cos(const Vec3& v, double c);

/// The 4x4 boost (ict representation) parameterized by velocity v: the
/// right-hand factor of the rotation x boost decomposition.
LorentzTransform lorentz_boost4(const Vec3& v, double c);

/// Embeds a spatial rotation as [[M, 0], [0, 1]].
LorentzTransform lorentz_rotation4(const Rotation3& r);

/// Group isomorphism F: unit-component Lorentz -> SO(3,C).  Decomposes the
/// input uniquely into rotation x boost and returns M (cos A + i sin A).
ComplexRotation3 lorentz_to_complex(const LorentzTransform& l);

/// Inverse of lorentz_to_complex.
LorentzTransform complex_to_lorentz(const ComplexRotation3& m);

/// Builds the 4x4 Lorentz-algebra element with rotation parameters (a, b, c)
/// and boost parameters (x, y, z):
///   [[0, c, -b, ix], [-c, 0, a, iy], [b, -a, 0, iz], [-ix, -iy, -iz, 0]].
CMat4 make_lorentz_algebra(const Vec3& rot_abc, const Vec3& boost_xyz);

/// Lie-algebra isomorphism: the matrix above maps to the complex antisymmetric
///   [[0, c+iz, -b-iy], [-c-iz, 0, a+ix], [b+iy, -a-ix, 0]].
/// Throws std::domain_error when the input does not match the pattern.
CMat3 algebra_iso(const CMat4& l4, double tol = 1e-9);

/// G_s algebra isomorphism onto so(3) x so(3): [[C,B],[B,C]] -> (C+B, C-B).
std::pair<SkewMat3, SkewMat3> gs_split(const GsAlgebra& g);

/// Exponential of a G_s algebra element, computed through gs_split.
GsElement gs_exp(const GsAlgebra& g);

/// The one-parameter subgroup of "translations" in the z-direction.
GsElement gs_z_translation(double alpha);

/// C^3 form of the boost: transforms the pair (space part, time part) of the
/// complexified displacement.  Input displacement dr over elapsed time t in
/// the base frame; the non-simultaneity shift dt = (dr.v/c^2)/sqrt(1-v^2/c^2)
/// is applied internally.  self_frame=true gives the self-coordinate result;
/// self_frame=false divides by beta = (1-v^2/c^2)^(-1/2) for quantities
/// measured from the basic coordinates.
std::pair<Vec3, Vec3> apply_boost_c3(const Vec3& dr, double t, const Vec3& v,
                                     double c, bool self_frame);

/// Time vector (x_t, y_t, z_t) = v/(c sqrt(1-v^2/c^2)) x (x,y,z) + offset.
Vec3 time_vector(const Vec3& x, const Vec3& v, double c, const Vec3& offset);

}  // namespace triad
