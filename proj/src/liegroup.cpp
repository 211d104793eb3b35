#include "triad/liegroup.hpp"

#include <cmath>
#include <stdexcept>

namespace triad {

namespace {

using Cplx = std::complex<double>;
constexpr Cplx kI{0.0, 1.0};

double gamma_factor(const Vec3& v, double c) {
  const double beta2 = v.squaredNorm() / (c * c);
  if (beta2 >= 1.0) {
    throw std::domain_error("boost: |v| >= c is a singularity");
  }
  return 1.0 / std::sqrt(1.0 - beta2);
}

}  // namespace

Rotation3 Rotation3::from_matrix(const Mat3& m, double tol) {
  if ((m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() > tol ||
      std::abs(m.determinant() - 1.0) > tol) {
    throw std::invalid_argument("Rotation3: not in SO(3,R)");
  }
  return Rotation3{m};
}

Rotation3 exp_so3(const SkewMat3& m) {
  const double angle = m.axial.norm();
  if (angle < 1e-8) {
    // Series in angle^2 keeps full accuracy near zero.
    const Mat3 k = m.matrix();
    return Rotation3{Mat3::Identity() + k + 0.5 * k * k};
  }
  const Mat3 k = hat(m.axial / angle).matrix();
  return Rotation3{Mat3::Identity() + std::sin(angle) * k +
                   (1.0 - std::cos(angle)) * k * k};
}

ComplexRotation3 ComplexRotation3::from_matrix(const CMat3& m, double tol) {
  if ((m * m.transpose() - CMat3::Identity()).cwiseAbs().maxCoeff() > tol ||
      std::abs(m.determinant() - Cplx(1.0)) > tol) {
    throw std::invalid_argument("ComplexRotation3: not in SO(3,C)");
  }
  return ComplexRotation3{m};
}

bool ComplexRotation3::is_hermitian(double tol) const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

LorentzTransform LorentzTransform::from_matrix(const CMat4& m, double tol) {
  if ((m.transpose() * m - CMat4::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("LorentzTransform: not complex-orthogonal");
  }
  if (std::abs(m(3, 3).imag()) > tol || m(3, 3).real() < 1.0 - tol) {
    throw std::invalid_argument("LorentzTransform: not in the unit component");
  }
  // ict pattern: real spatial block, imaginary mixed entries.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(m(i, j).imag()) > tol) {
        throw std::invalid_argument("LorentzTransform: spatial block not real");
      }
    }
    if (std::abs(m(i, 3).real()) > tol || std::abs(m(3, i).real()) > tol) {
      throw std::invalid_argument(
          "LorentzTransform: mixed entries not imaginary");
    }
  }
  return LorentzTransform{m};
}

GsElement GsElement::from_matrix(const Mat6& m, double tol) {
  if ((m.transpose() * m - Mat6::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("GsElement: not orthogonal");
  }
  const Mat3 p = m.topLeftCorner<3, 3>();
  const Mat3 q = m.topRightCorner<3, 3>();
  if ((m.bottomLeftCorner<3, 3>() - q).cwiseAbs().maxCoeff() > tol ||
      (m.bottomRightCorner<3, 3>() - p).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("GsElement: block structure violated");
  }
  return GsElement{m};
}

Mat6 GsAlgebra::matrix() const {
  Mat6 m;
  const Mat3 cm = c.matrix();
  const Mat3 bm = b.matrix();
  m.topLeftCorner<3, 3>() = cm;
  m.topRightCorner<3, 3>() = bm;
  m.bottomLeftCorner<3, 3>() = bm;
  m.bottomRightCorner<3, 3>() = cm;
  return m;
}

std::pair<CMat3, CMat3> ComplexGsAlgebra::split() const {
  const CMat3 tt = kI * t.matrix().cast<Cplx>();
  return {(c.matrix() + b.matrix()).cast<Cplx>() + tt,
          (c.matrix() - b.matrix()).cast<Cplx>() + tt};
}

BoostTrig boost_sin_cos(const Vec3& v, double c) {
  const double gamma = gamma_factor(v, c);
  // sin A carries the -1/(c sqrt(1-v^2/c^2)) factor of the velocity matrix
  // [[0, vz, -vy], [-vz, 0, vx], [vy, -vx, 0]]; that matrix is hat(-v), so
  // sin A = hat(gamma v / c).
  const Vec3 u = gamma / c * v;
  BoostTrig out;
  out.sin_a = hat(u);
  out.cos_a = gamma * Mat3::Identity() - u * u.transpose() / (1.0 + gamma);
  return out;
}

LorentzTransform lorentz_boost4(const Vec3& v, double c) {
  const double gamma = gamma_factor(v, c);
  // (V1..V4) = (v_x, v_y, v_z, ic) / (ic sqrt(1 - v^2/c^2)); the spatial V
  // components are purely imaginary: V_k = -i gamma v_k / c.
  CVec3 vs;
  for (int k = 0; k < 3; ++k) vs(k) = -kI * gamma * v(k) / c;
  const double v4 = gamma;
  CMat4 m = CMat4::Identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = (i == j ? 1.0 : 0.0) - vs(i) * vs(j) / (1.0 + v4);
    }
    m(i, 3) = vs(i);
    m(3, i) = -vs(i);
  }
  m(3, 3) = v4;
  return LorentzTransform{m};
}

LorentzTransform lorentz_rotation4(const Rotation3& r) {
  CMat4 m = CMat4::Identity();
  m.topLeftCorner<3, 3>() = r.m.cast<Cplx>();
  return LorentzTransform{m};
}

ComplexRotation3 lorentz_to_complex(const LorentzTransform& l) {
  // The rotation factor leaves the last row untouched, so the boost
  // parameters can be read off directly: (V1,V2,V3) = -last row, V4 = corner.
  const CMat4& m = l.m;
  const double v4 = m(3, 3).real();
  if (m(3, 3).imag() != 0.0 && std::abs(m(3, 3).imag()) > 1e-9) {
    throw std::domain_error("lorentz_to_complex: corner entry not real");
  }
  if (v4 < 1.0 - 1e-9) {
    throw std::domain_error("lorentz_to_complex: not in the unit component");
  }
  Vec3 u;  // u = gamma v / c, real
  for (int k = 0; k < 3; ++k) {
    const Cplx vk = -m(3, k);
    if (std::abs(vk.real()) > 1e-9 * std::max(1.0, v4)) {
      throw std::domain_error("lorentz_to_complex: boost row not imaginary");
    }
    u(k) = -vk.imag();  // V_k = -i u_k
  }
  // Rebuild the boost factor and peel it off to recover the rotation.
  const Mat3 cos_a =
      v4 * Mat3::Identity() - u * u.transpose() / (1.0 + v4);
  const Mat3 sin_a = hat(u).matrix();
  CMat4 boost = CMat4::Identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      boost(i, j) = (i == j ? 1.0 : 0.0) -
                    (-kI * u(i)) * (-kI * u(j)) / (1.0 + v4);
    }
    boost(i, 3) = -kI * u(i);
    boost(3, i) = kI * u(i);
  }
  boost(3, 3) = v4;
  // Boost is complex-orthogonal, so its inverse is the plain transpose.
  const CMat4 rot_emb = m * boost.transpose();
  Mat3 rot;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) rot(i, j) = rot_emb(i, j).real();
  }
  const CMat3 h = cos_a.cast<Cplx>() + kI * sin_a.cast<Cplx>();
  return ComplexRotation3{rot.cast<Cplx>() * h};
}

LorentzTransform complex_to_lorentz(const ComplexRotation3& cr) {
  // With H the Hermitian boost factor and M the real rotation, m^dagger m =
  // H^2, the boost with doubled rapidity: read u2 = 2 gamma u off its
  // imaginary part and halve the rapidity.
  const CMat3& m = cr.m;
  const CMat3 h2 = m.adjoint() * m;
  Mat3 im;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) im(i, j) = h2(i, j).imag();
  }
  const Vec3 u2 = vee(SkewMat3::from_matrix(im, 1e-9));
  const double g2 = (h2.real().trace() - 1.0) / 2.0;  // gamma of H^2
  const double gamma = std::sqrt(std::max(1.0, (1.0 + g2) / 2.0));
  const Vec3 u = u2 / (2.0 * gamma);
  const Mat3 cos_a =
      gamma * Mat3::Identity() - u * u.transpose() / (1.0 + gamma);
  const CMat3 h = cos_a.cast<Cplx>() + kI * hat(u).matrix().cast<Cplx>();
  // H^{-1} = conj(H) for a Hermitian complex-orthogonal matrix.
  const CMat3 rot_c = m * h.conjugate();
  Mat3 rot;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) rot(i, j) = rot_c(i, j).real();
  }
  CMat4 out = CMat4::Identity();
  out.topLeftCorner<3, 3>() = rot.cast<Cplx>();
  CMat4 boost = CMat4::Identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      boost(i, j) = (i == j ? 1.0 : 0.0) -
                    (-kI * u(i)) * (-kI * u(j)) / (1.0 + gamma);
    }
    boost(i, 3) = -kI * u(i);
    boost(3, i) = kI * u(i);
  }
  boost(3, 3) = gamma;
  return LorentzTransform{out * boost};
}

CMat4 make_lorentz_algebra(const Vec3& rot_abc, const Vec3& boost_xyz) {
  const double a = rot_abc.x(), b = rot_abc.y(), c = rot_abc.z();
  const double x = boost_xyz.x(), y = boost_xyz.y(), z = boost_xyz.z();
  CMat4 m = CMat4::Zero();
  m(0, 1) = c;
  m(0, 2) = -b;
  m(1, 2) = a;
  m(1, 0) = -c;
  m(2, 0) = b;
  m(2, 1) = -a;
  m(0, 3) = kI * x;
  m(1, 3) = kI * y;
  m(2, 3) = kI * z;
  m(3, 0) = -kI * x;
  m(3, 1) = -kI * y;
  m(3, 2) = -kI * z;
  return m;
}

CMat3 algebra_iso(const CMat4& l4, double tol) {
  const double scale = std::max(1.0, l4.cwiseAbs().maxCoeff());
  if ((l4 + l4.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::domain_error("algebra_iso: input not antisymmetric");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(l4(i, j).imag()) > tol * scale) {
        throw std::domain_error("algebra_iso: spatial block not real");
      }
    }
    if (std::abs(l4(i, 3).real()) > tol * scale) {
      throw std::domain_error("algebra_iso: boost column not imaginary");
    }
  }
  const double a = l4(1, 2).real();
  const double b = l4(2, 0).real();
  const double c = l4(0, 1).real();
  const double x = l4(0, 3).imag();
  const double y = l4(1, 3).imag();
  const double z = l4(2, 3).imag();
  const Cplx ca = a + kI * x;
  const Cplx cb = b + kI * y;
  const Cplx cc = c + kI * z;
  CMat3 m = CMat3::Zero();
  m(0, 1) = cc;
  m(0, 2) = -cb;
  m(1, 2) = ca;
  m(1, 0) = -cc;
  m(2, 0) = cb;
  m(2, 1) = -ca;
  return m;
}

std::pair<SkewMat3, SkewMat3> gs_split(const GsAlgebra& g) {
  return {hat(g.c.axial + g.b.axial), hat(g.c.axial - g.b.axial)};
}

GsElement gs_exp(const GsAlgebra& g) {
  const auto [plus, minus] = gs_split(g);
  const Mat3 ep = exp_so3(plus).m;
  const Mat3 em = exp_so3(minus).m;
  // Conjugating the split by S = (1/sqrt 2) [[I, I], [I, -I]] gives
  // P = (e^{C+B} + e^{C-B})/2, Q = (e^{C+B} - e^{C-B})/2.
  Mat6 m;
  m.topLeftCorner<3, 3>() = 0.5 * (ep + em);
  m.topRightCorner<3, 3>() = 0.5 * (ep - em);
  m.bottomLeftCorner<3, 3>() = m.topRightCorner<3, 3>();
  m.bottomRightCorner<3, 3>() = m.topLeftCorner<3, 3>();
  return GsElement{m};
}

GsElement gs_z_translation(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("gs_z_translation: non-finite angle");
  }
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  Mat6 m = Mat6::Zero();
  m(0, 0) = ca;
  m(0, 4) = sa;
  m(1, 1) = ca;
  m(1, 3) = -sa;
  m(2, 2) = 1.0;
  m(3, 1) = sa;
  m(3, 3) = ca;
  m(4, 0) = -sa;
  m(4, 4) = ca;
  m(5, 5) = 1.0;
  return GsElement{m};
}

std::pair<Vec3, Vec3> apply_boost_c3(const Vec3& dr, double t, const Vec3& v,
                                     double c, bool self_frame) {
  const double gamma = gamma_factor(v, c);
  const double vnorm = v.norm();
  const double delta_t = dr.dot(v) / (c * c) * gamma;
  const double total_t = t + delta_t;
  Vec3 re = dr;
  Vec3 im = Vec3::Zero();
  // c-vec = (v/|v|) c has no direction at v = 0; both t-dependent terms
  // vanish there (no boost).
  if (vnorm > 1e-12 * c) {
    re += v * total_t;
    im = (v / vnorm) * c * total_t;
  }
  const BoostTrig bt = boost_sin_cos(v, c);
  const Mat3 sin_a = bt.sin_a.matrix();
  const Vec3 out_re = bt.cos_a * re - sin_a * im;
  const Vec3 out_im = sin_a * re + bt.cos_a * im;
  if (self_frame) {
    return {out_re, out_im};
  }
  const double inv_beta = 1.0 / gamma;
  return {inv_beta * out_re, inv_beta * out_im};
}

Vec3 time_vector(const Vec3& x, const Vec3& v, double c, const Vec3& offset) {
  const double gamma = gamma_factor(v, c);
  return (gamma / c) * v.cross(x) + offset;
}

}  // namespace triad
