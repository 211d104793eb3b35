#include "triad/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace triad {

std::optional<FrenetFrame> frenet_frame(const CurveJet& jet,
                                        const FrenetThresholds& thr) {
  const double speed = jet.r1.norm();
  if (speed <= thr.eps_v) {
    return std::nullopt;
  }
  const Vec3 cross = jet.r1.cross(jet.r2);
  const double cn = cross.norm();
  if (cn <= thr.eps_k * speed * speed) {
    return std::nullopt;
  }
  FrenetFrame f;
  f.t = jet.r1 / speed;
  f.b = cross / cn;
  f.n = f.b.cross(f.t);
  f.k = cn / (speed * speed * speed);
  f.tau = cross.dot(jet.r3) / (cn * cn);
  f.s_rate = speed;
  return f;
}

CurveJet jet_from_sampler(const TrajectorySampler& s, double t) {
  const double h = s.h;
  const Vec3 fm2 = s.position(t - 2 * h);
  const Vec3 fm1 = s.position(t - h);
  const Vec3 f0 = s.position(t);
  const Vec3 fp1 = s.position(t + h);
  const Vec3 fp2 = s.position(t + 2 * h);
  CurveJet jet;
  jet.r = f0;
  jet.r1 = (fp1 - fm1) / (2 * h);
  jet.r2 = (fp1 - 2 * f0 + fm1) / (h * h);
  jet.r3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
  return jet;
}

Vec3 thomas_precession(const Vec3& v, const Vec3& a, double c) {
  return -v.cross(a) / (2.0 * c * c);
}

Vec3 osculating_center(const CurveJet& jet, const FrenetThresholds& thr) {
  const auto f = frenet_frame(jet, thr);
  if (!f) {
    throw std::domain_error("osculating_center: degenerate frame");
  }
  return jet.r + f->n / f->k;
}

}  // namespace triad
