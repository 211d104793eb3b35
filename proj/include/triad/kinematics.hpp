// Frenet-Serret frames, curvature/torsion and osculating geometry from
// sampled or analytic trajectories.
#pragma once

#include "triad/linalg.hpp"

#include <functional>
#include <optional>

namespace triad {

/// Position and its first three time derivatives along a trajectory.
struct CurveJet {
  Vec3 r{Vec3::Zero()};
  Vec3 r1{Vec3::Zero()};  // m/s
  Vec3 r2{Vec3::Zero()};  // m/s^2
  Vec3 r3{Vec3::Zero()};  // m/s^3
};

/// Orthonormal right-handed moving trihedron with curvature k, torsion tau
/// and the arc-length rate ds/dt = |r1| that converts the arc-parameter
/// Frenet relations to time derivatives.
struct FrenetFrame {
  Vec3 t, n, b;
  double k = 0.0;       // 1/m
  double tau = 0.0;     // 1/m
  double s_rate = 0.0;  // m/s
};

struct FrenetThresholds {
  double eps_v = 1e-12;  // minimum speed |r1|
  double eps_k = 1e-12;  // minimum |r1 x r2| relative to |r1|^2 per unit length
};

/// Frame extraction:
///   t = r1/|r1|, b = (r1 x r2)/|r1 x r2|, n = b x t,
///   k = |r1 x r2|/|r1|^3, tau = (r1, r2, r3)/|r1 x r2|^2.
/// Returns nullopt for stationary or straight-line (degenerate) jets.
std::optional<FrenetFrame> frenet_frame(const CurveJet& jet,
                                        const FrenetThresholds& thr = {});

/// Position function plus the finite-difference step used to extract jets.
struct TrajectorySampler {
  std::function<Vec3(double)> position;
  double h = 1e-4;
};

/// Central finite differences, O(h^2):
///   r1: (f(t+h) - f(t-h)) / 2h
///   r2: (f(t+h) - 2 f(t) + f(t-h)) / h^2
///   r3: (f(t+2h) - 2 f(t+h) + 2 f(t-h) - f(t-2h)) / 2 h^3
CurveJet jet_from_sampler(const TrajectorySampler& s, double t);

/// Thomas precession w = -(v x a) / (2 c^2).
Vec3 thomas_precession(const Vec3& v, const Vec3& a, double c);

/// Center of the osculating circle, r + n/k.  Throws on degenerate frames.
Vec3 osculating_center(const CurveJet& jet, const FrenetThresholds& thr = {});

}  // namespace triad
