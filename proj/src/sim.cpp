#include "triad/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace triad {

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat3 rot_z(double a) {
  Mat3 m;
  m << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return m;
}

Mat3 rot_y(double a) {
  Mat3 m;
  m << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return m;
}

}  // namespace

double BodyModel::total_mass() const {
  KahanSum s;
  for (const auto& n : nodes) s.add(n.mass);
  return s.value();
}

Vec3 BodyModel::barycenter() const {
  KahanVec3 s;
  KahanSum m;
  for (const auto& n : nodes) {
    s.add(n.mass * n.pos);
    m.add(n.mass);
  }
  return s.value() / m.value();
}

double BodyModel::moment_of_inertia(const Vec3& axis) const {
  const Vec3 a = axis.normalized();
  KahanSum s;
  for (const auto& n : nodes) {
    const Vec3 perp = n.pos - n.pos.dot(a) * a;
    s.add(n.mass * perp.squaredNorm());
  }
  return s.value();
}

BodyModel discretize_sphere(double radius, double mass, int n_rings,
                            int n_per_ring) {
  if (n_rings < 4 || n_per_ring < 8) {
    throw std::invalid_argument("discretize_sphere: counts too small");
  }
  BodyModel body;
  body.shape = BodyShape::sphere;
  body.radius = radius;
  const double node_mass =
      mass / (static_cast<double>(n_rings) * n_per_ring);
  const bool symmetric = (n_rings % 2 == 0) && (n_per_ring % 2 == 0);
  body.nodes.reserve(static_cast<std::size_t>(n_rings) * n_per_ring);
  if (symmetric) {
    // Emit antipodal pairs as exact negations, adjacent in storage order, so
    // symmetric sums cancel identically.
    for (int j = 0; j < n_rings / 2; ++j) {
      const double z = radius * (-1.0 + (j + 0.5) * 2.0 / n_rings);
      const double rho = std::sqrt(radius * radius - z * z);
      for (int k = 0; k < n_per_ring; ++k) {
        const double th = 2.0 * kPi * (k + 0.5) / n_per_ring;
        const Vec3 p(rho * std::cos(th), rho * std::sin(th), z);
        body.nodes.push_back({node_mass, p});
        body.nodes.push_back({node_mass, -p});
      }
    }
  } else {
    for (int j = 0; j < n_rings; ++j) {
      const double z = radius * (-1.0 + (j + 0.5) * 2.0 / n_rings);
      const double rho = std::sqrt(radius * radius - z * z);
      for (int k = 0; k < n_per_ring; ++k) {
        const double th = 2.0 * kPi * (k + 0.5) / n_per_ring;
        body.nodes.push_back(
            {node_mass, Vec3(rho * std::cos(th), rho * std::sin(th), z)});
      }
    }
  }
  return body;
}

BodyModel discretize_disc(double radius, double mass, int n_radii,
                          int n_per_ring) {
  if (n_radii < 1 || n_per_ring < 8) {
    throw std::invalid_argument("discretize_disc: counts too small");
  }
  BodyModel body;
  body.shape = BodyShape::disc;
  body.radius = radius;

  std::vector<double> ring_r, ring_mass;
  if (n_radii == 1) {
    // Hoop mode: the whole mass on the rim.
    ring_r.push_back(radius);
    ring_mass.push_back(mass);
  } else {
    double wsum = 0.0;
    for (int j = 0; j < n_radii; ++j) {
      const double r = radius * (j + 0.5) / n_radii;
      ring_r.push_back(r);
      wsum += r;  // uniform surface density: ring weight ~ r dr
    }
    for (int j = 0; j < n_radii; ++j) {
      ring_mass.push_back(mass * ring_r[j] / wsum);
    }
  }

  for (std::size_t j = 0; j < ring_r.size(); ++j) {
    const double node_mass = ring_mass[j] / n_per_ring;
    if (n_per_ring % 2 == 0) {
      for (int k = 0; k < n_per_ring / 2; ++k) {
        const double th = 2.0 * kPi * (k + 0.5) / n_per_ring;
        const Vec3 p(ring_r[j] * std::cos(th), ring_r[j] * std::sin(th), 0.0);
        body.nodes.push_back({node_mass, p});
        body.nodes.push_back({node_mass, -p});
      }
    } else {
      for (int k = 0; k < n_per_ring; ++k) {
        const double th = 2.0 * kPi * (k + 0.5) / n_per_ring;
        body.nodes.push_back(
            {node_mass,
             Vec3(ring_r[j] * std::cos(th), ring_r[j] * std::sin(th), 0.0)});
      }
    }
  }
  return body;
}

ScalarLaw ScalarLaw::constant(double v) {
  return {[v](double) { return v; }, [](double) { return 0.0; },
          [](double) { return 0.0; }, [](double) { return 0.0; }};
}

ScalarLaw ScalarLaw::polynomial(const std::array<double, 4>& c) {
  return {
      [c](double t) { return c[0] + t * (c[1] + t * (c[2] + t * c[3])); },
      [c](double t) { return c[1] + t * (2 * c[2] + t * 3 * c[3]); },
      [c](double t) { return 2 * c[2] + 6 * c[3] * t; },
      [c](double) { return 6 * c[3]; }};
}

Mat3 EulerAngleLaw::rotation(double t) const {
  return rot_z(psi.f(t)) * rot_y(phi.f(t)) * rot_z(chi.f(t));
}

Vec3 EulerAngleLaw::axis(double t) const {
  const double p = psi.f(t), ph = phi.f(t);
  return Vec3(std::sin(ph) * std::cos(p), std::sin(ph) * std::sin(p),
              std::cos(ph));
}

Vec3 EulerAngleLaw::axis_rate(double t) const {
  const Vec3 zhat(0, 0, 1);
  const double p = psi.f(t);
  const Vec3 y_psi(-std::sin(p), std::cos(p), 0);
  const Vec3 b = axis(t);
  return psi.d1(t) * zhat.cross(b) + phi.d1(t) * y_psi.cross(b);
}

void EulerAngleLaw::angular_state(double t, Vec3& w, Vec3& wp,
                                  Vec3& wpp) const {
  const Vec3 zhat(0, 0, 1);
  const double ps = psi.f(t);
  const double ps1 = psi.d1(t), ps2 = psi.d2(t), ps3 = psi.d3(t);
  const double ph1 = phi.d1(t), ph2 = phi.d2(t), ph3 = phi.d3(t);
  const double ch1 = chi.d1(t), ch2 = chi.d2(t), ch3 = chi.d3(t);

  const Vec3 y_psi(-std::sin(ps), std::cos(ps), 0);
  const Vec3 y_psi_1 = ps1 * zhat.cross(y_psi);
  const Vec3 y_psi_2 = ps2 * zhat.cross(y_psi) + ps1 * zhat.cross(y_psi_1);

  const Vec3 b = axis(t);
  const Vec3 b1 = ps1 * zhat.cross(b) + ph1 * y_psi.cross(b);
  const Vec3 b2 = ps2 * zhat.cross(b) + ps1 * zhat.cross(b1) +
                  ph2 * y_psi.cross(b) + ph1 * y_psi_1.cross(b) +
                  ph1 * y_psi.cross(b1);

  w = ps1 * zhat + ph1 * y_psi + ch1 * b;
  wp = ps2 * zhat + ph2 * y_psi + ph1 * y_psi_1 + ch2 * b + ch1 * b1;
  wpp = ps3 * zhat + ph3 * y_psi + 2 * ph2 * y_psi_1 + ph1 * y_psi_2 +
        ch3 * b + 2 * ch2 * b1 + ch1 * b2;
}

Mat3 law_rotation(const MotionLaw& law, double t) {
  if (const auto* e = std::get_if<EulerAngleLaw>(&law)) {
    return e->rotation(t);
  }
  return std::get<GenericRotationLaw>(law).rotation(t);
}

std::vector<CurveJet> rigid_trajectories(const BodyModel& body,
                                         const MotionLaw& law, double t,
                                         double h) {
  std::vector<CurveJet> jets;
  jets.reserve(body.nodes.size());
  if (const auto* e = std::get_if<EulerAngleLaw>(&law)) {
    const Mat3 a = e->rotation(t);
    Vec3 w, wp, wpp;
    e->angular_state(t, w, wp, wpp);
    for (const auto& n : body.nodes) {
      CurveJet j;
      j.r = a * n.pos;
      j.r1 = w.cross(j.r);
      j.r2 = wp.cross(j.r) + w.cross(j.r1);
      j.r3 = wpp.cross(j.r) + 2.0 * wp.cross(j.r1) + w.cross(j.r2);
      jets.push_back(j);
    }
    return jets;
  }
  const auto& g = std::get<GenericRotationLaw>(law);
  const double step = h > 0 ? h : g.fd_step;
  const Mat3 am2 = g.rotation(t - 2 * step);
  const Mat3 am1 = g.rotation(t - step);
  const Mat3 a0 = g.rotation(t);
  const Mat3 ap1 = g.rotation(t + step);
  const Mat3 ap2 = g.rotation(t + 2 * step);
  const Mat3 d1 = (ap1 - am1) / (2 * step);
  const Mat3 d2 = (ap1 - 2 * a0 + am1) / (step * step);
  const Mat3 d3 = (ap2 - 2 * ap1 + 2 * am1 - am2) / (2 * step * step * step);
  for (const auto& n : body.nodes) {
    jets.push_back({a0 * n.pos, d1 * n.pos, d2 * n.pos, d3 * n.pos});
  }
  return jets;
}

double curvature_flow_average(const BodyModel& body, const MotionLaw& law,
                              double t, double h) {
  const auto jets_m = rigid_trajectories(body, law, t - h, h);
  const auto jets_p = rigid_trajectories(body, law, t + h, h);
  KahanSum acc, mass;
  for (std::size_t i = 0; i < body.nodes.size(); ++i) {
    const auto fm = frenet_frame(jets_m[i]);
    const auto fp = frenet_frame(jets_p[i]);
    mass.add(body.nodes[i].mass);
    if (fm && fp) {
      acc.add(body.nodes[i].mass * (std::log(fp->k) - std::log(fm->k)) /
              (2 * h));
    }
  }
  return acc.value() / mass.value();
}

namespace {

ParticleSystem system_at(const BodyModel& body, const MotionLaw& law,
                         double t) {
  // Generic laws differentiate with their own fd_step, not the integration
  // step.
  const auto jets = rigid_trajectories(body, law, t, 0.0);
  std::vector<Particle> parts(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    parts[i] = {body.nodes[i].mass, jets[i]};
  }
  return ParticleSystem::make(std::move(parts));
}

void differentiate_spin_a(std::vector<SimSample>& samples, double h) {
  const std::size_t n = samples.size();
  if (n < 3) return;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    samples[k].spin_a =
        (samples[k + 1].spin_v - samples[k - 1].spin_v) / (2 * h);
  }
  samples[0].spin_a = (samples[1].spin_v - samples[0].spin_v) / h;
  samples[n - 1].spin_a =
      (samples[n - 1].spin_v - samples[n - 2].spin_v) / h;
}

}  // namespace

SimOutput run_free_fall(const BodyModel& body, const MotionLaw& law,
                        const GravityContext& gctx, double t_end, double h) {
  if (!(h > 0.0) || !(t_end > 0.0)) {
    throw std::invalid_argument("run_free_fall: bad step or horizon");
  }
  const int n_steps = static_cast<int>(std::llround(t_end / h));
  SimOutput out;
  out.h = h;
  out.samples.reserve(n_steps + 1);

  const auto spin_v_at = [&](double t) {
    return system_spin_velocity_gravity(system_at(body, law, t), gctx);
  };
  struct Eval {
    Vec3 v;
    double ratio;
  };
  const auto eval_at = [&](double t) {
    const ParticleSystem sys = system_at(body, law, t);
    return Eval{system_spin_velocity_gravity(sys, gctx),
                condition_ratio(sys, gctx.g)};
  };
  const auto push_sample = [&](double t, const Vec3& pos, const Eval& e) {
    SimSample s;
    s.t = t;
    s.pos = pos;
    s.spin_v = e.v;
    s.ratio84 = e.ratio;
    if (const auto* eu = std::get_if<EulerAngleLaw>(&law)) s.axis_b = eu->axis(t);
    out.ratio_exceeded |= s.ratio84 > 1.0;
    out.samples.push_back(s);
  };

  Vec3 x = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Eval cur = eval_at(0.0);
  push_sample(0.0, x, cur);

  for (int k = 0; k < n_steps; ++k) {
    const double t = k * h;
    // x' = v + V(t), v' = g: RK4 with V evaluated at the stage times.
    const Vec3 v_mid = spin_v_at(t + 0.5 * h);
    const Eval next = eval_at(t + h);
    const Vec3 k1x = v + cur.v;
    const Vec3 k1v = gctx.g;
    const Vec3 k2x = (v + 0.5 * h * k1v) + v_mid;
    const Vec3 k2v = gctx.g;
    const Vec3 k3x = (v + 0.5 * h * k2v) + v_mid;
    const Vec3 k3v = gctx.g;
    const Vec3 k4x = (v + h * k3v) + next.v;
    const Vec3 k4v = gctx.g;
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    cur = next;
    push_sample((k + 1) * h, x, cur);
  }
  differentiate_spin_a(out.samples, h);
  return out;
}

SimOutput run_disc_on_plane(const BodyModel& body, const MotionLaw& law,
                            double g_mag, double t_end, double h) {
  const auto* euler = std::get_if<EulerAngleLaw>(&law);
  if (!euler) {
    throw std::invalid_argument(
        "run_disc_on_plane: requires a parameterized axis law");
  }
  if (!(h > 0.0) || !(t_end > 0.0)) {
    throw std::invalid_argument("run_disc_on_plane: bad step or horizon");
  }
  const Vec3 g(0, 0, -g_mag);
  const int n_steps = static_cast<int>(std::llround(t_end / h));

  const auto v_horiz = [&](double t) {
    AxisState ax;
    ax.b = euler->axis(t);
    ax.dbdt = euler->axis_rate(t);
    ax.w = euler->chi.d1(t);
    ax.dwdt = euler->chi.d2(t);
    Vec3 v = averaged_sphere_velocity(ax, g).total;
    v.z() = 0.0;  // barycenter confined to the plane
    return v;
  };

  SimOutput out;
  out.h = h;
  out.samples.reserve(n_steps + 1);
  Vec3 x = Vec3::Zero();
  for (int k = 0; k <= n_steps; ++k) {
    const double t = k * h;
    SimSample s;
    s.t = t;
    s.pos = x;
    s.spin_v = v_horiz(t);
    s.axis_b = euler->axis(t);
    const ParticleSystem sys = system_at(body, law, t);
    s.ratio84 = condition_ratio(sys, g);
    out.ratio_exceeded |= s.ratio84 > 1.0;
    out.samples.push_back(s);
    if (k == n_steps) break;
    const Vec3 k1 = s.spin_v;
    const Vec3 k2 = v_horiz(t + 0.5 * h);
    const Vec3 k4 = v_horiz(t + h);
    x += h / 6.0 * (k1 + 4 * k2 + k4);  // x' depends on t only
  }
  differentiate_spin_a(out.samples, h);
  out.fit = fit_circle_xy(out.samples);
  return out;
}

SimOutput run_spin_down(const BodyModel& body, double w1, double w2,
                        double phi, double g_mag, double t_end, double h) {
  if (w1 == 0.0 || w2 == 0.0 || w1 * w2 < 0.0) {
    throw std::invalid_argument(
        "run_spin_down: w1, w2 must be nonzero with equal signs");
  }
  if (!(h > 0.0) || !(t_end > 0.0)) {
    throw std::invalid_argument("run_spin_down: bad step or horizon");
  }
  // Axis fixed at elevation phi above the horizontal plane; linear ramp
  // chi'(t) from w1 to w2.
  EulerAngleLaw law;
  law.psi = ScalarLaw::constant(0.0);
  law.phi = ScalarLaw::constant(kPi / 2.0 - phi);
  law.chi = ScalarLaw::polynomial({0.0, w1, (w2 - w1) / (2.0 * t_end), 0.0});
  const Vec3 b = law.axis(0.0);
  const Vec3 g(0, 0, -g_mag);
  const double dwdt = (w2 - w1) / t_end;

  const auto v_spin = [&](double t) {
    AxisState ax;
    ax.b = b;
    ax.w = std::abs(w1 + dwdt * t);
    ax.dwdt = (w1 + dwdt * t) < 0 ? -dwdt : dwdt;
    return axis_fixed_spin_velocity(ax, g);
  };

  const int n_steps = static_cast<int>(std::llround(t_end / h));
  SimOutput out;
  out.h = h;
  out.samples.reserve(n_steps + 1);
  Vec3 x = Vec3::Zero();
  const MotionLaw mlaw = law;
  for (int k = 0; k <= n_steps; ++k) {
    const double t = k * h;
    SimSample s;
    s.t = t;
    s.pos = x;
    s.spin_v = v_spin(t);
    s.axis_b = b;
    const ParticleSystem sys = system_at(body, mlaw, t);
    s.ratio84 = condition_ratio(sys, g);
    out.ratio_exceeded |= s.ratio84 > 1.0;
    out.samples.push_back(s);
    if (k == n_steps) break;
    const Vec3 k1 = s.spin_v;
    const Vec3 k2 = v_spin(t + 0.5 * h);
    const Vec3 k4 = v_spin(t + h);
    x += h / 6.0 * (k1 + 4 * k2 + k4);
  }
  differentiate_spin_a(out.samples, h);
  const Vec3 disp = out.samples.back().pos - out.samples.front().pos;
  out.horizontal_displacement = std::hypot(disp.x(), disp.y());
  return out;
}

SpinTermBreakdown brute_force_average(const BodyModel& body,
                                      const MotionLaw& law, const Vec3& g,
                                      double t, double h) {
  const auto jets = rigid_trajectories(body, law, t, h);
  KahanVec3 aI, aII, aIII, aIV;
  KahanSum mass;
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const double m = body.nodes[i].mass;
    const SpinTermBreakdown d = decompose_terms(jets[i], g);
    aI.add(m * d.vI);
    aII.add(m * d.vII);
    aIII.add(m * d.vIII);
    aIV.add(m * d.vIV);
    mass.add(m);
  }
  SpinTermBreakdown out;
  const double inv_m = 1.0 / mass.value();
  out.vI = aI.value() * inv_m;
  out.vII = aII.value() * inv_m;
  out.vIII = aIII.value() * inv_m;
  out.vIV = aIV.value() * inv_m;
  out.total = out.vI + out.vII + out.vIII + out.vIV;
  return out;
}

CircleFit fit_circle_xy(const std::vector<SimSample>& samples) {
  // Kasa algebraic fit: minimize sum ((x-a)^2 + (y-b)^2 - R^2)^2, linear in
  // (a, b, a^2 + b^2 - R^2).
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d atb = Eigen::Vector3d::Zero();
  for (const auto& s : samples) {
    const double x = s.pos.x(), y = s.pos.y();
    const Eigen::Vector3d row(2 * x, 2 * y, -1.0);
    ata += row * row.transpose();
    atb += row * (x * x + y * y);
  }
  const Eigen::Vector3d sol = ata.ldlt().solve(atb);
  CircleFit fit;
  fit.cx = sol(0);
  fit.cy = sol(1);
  fit.radius = std::sqrt(std::max(0.0, sol(0) * sol(0) + sol(1) * sol(1) - sol(2)));

  // Fitted angular rate: unwrapped polar angle about the center, regressed
  // against time.
  double prev = 0.0, unwrapped = 0.0;
  double st = 0, sth = 0, stt = 0, stth = 0;
  double rms = 0.0;
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double dx = samples[i].pos.x() - fit.cx;
    const double dy = samples[i].pos.y() - fit.cy;
    double th = std::atan2(dy, dx);
    if (i > 0) {
      double d = th - prev;
      while (d > kPi) d -= 2 * kPi;
      while (d < -kPi) d += 2 * kPi;
      unwrapped += d;
    }
    prev = th;
    const double t = samples[i].t;
    st += t;
    sth += unwrapped;
    stt += t * t;
    stth += t * unwrapped;
    const double res = std::hypot(dx, dy) - fit.radius;
    rms += res * res;
  }
  const double denom = n * stt - st * st;
  fit.angular_rate = denom != 0.0 ? (n * stth - st * sth) / denom : 0.0;
  fit.rms = std::sqrt(rms / n);
  return fit;
}

}  // namespace triad
