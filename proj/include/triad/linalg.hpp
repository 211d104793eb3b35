// Small fixed-size linear algebra used throughout: axial vectors,
// antisymmetric 3x3 matrices, the Rodrigues exponential and compensated
// accumulation for deterministic particle sums.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace triad {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;
using CMat4 = Eigen::Matrix4cd;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Antisymmetric 3x3 matrix stored through its axial vector, so that
/// M^T = -M holds exactly by construction.
struct SkewMat3 {
  Vec3 axial{Vec3::Zero()};

  Mat3 matrix() const {
    Mat3 m;
    m << 0.0, -axial.z(), axial.y(),
        axial.z(), 0.0, -axial.x(),
        -axial.y(), axial.x(), 0.0;
    return m;
  }

  /// Application to a vector equals the cross product axial x w.
  Vec3 apply(const Vec3& w) const { return axial.cross(w); }

  /// Reads the three independent entries of a matrix that is expected to be
  /// antisymmetric; throws if the symmetry residual is large.
  static SkewMat3 from_matrix(const Mat3& m, double tol = 1e-9) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
      throw std::invalid_argument("SkewMat3: matrix is not antisymmetric");
    }
    return SkewMat3{Vec3(m(2, 1), m(0, 2), m(1, 0))};
  }
};

inline SkewMat3 hat(const Vec3& v) { return SkewMat3{v}; }

inline Vec3 vee(const SkewMat3& m) { return m.axial; }

/// Compensated (Kahan) scalar accumulator; keeps particle sums
/// bit-reproducible in storage order.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanVec3 {
 public:
  void add(const Vec3& v) {
    x_.add(v.x());
    y_.add(v.y());
    z_.add(v.z());
  }
  Vec3 value() const { return Vec3(x_.value(), y_.value(), z_.value()); }

 private:
  KahanSum x_, y_, z_;
};

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace triad
