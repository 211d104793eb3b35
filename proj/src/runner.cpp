#include "triad/runner.hpp"

#include "triad/invariants.hpp"
#include "triad/kinematics.hpp"
#include "triad/precession.hpp"
#include "triad/sim.hpp"
#include "triad/spin.hpp"
#include "triad/verify.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace triad {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Round-trippable CSV cell: 17 significant digits, scientific.
std::string cell(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

BodyModel body_from_scenario(const Scenario& sc) {
  if (sc.body_shape == "sphere") {
    return discretize_sphere(sc.radius_m, sc.mass_kg, sc.n_rings, sc.n_per_ring);
  }
  if (sc.body_shape == "hoop") {
    return discretize_disc(sc.radius_m, sc.mass_kg, 1, sc.n_per_ring);
  }
  return discretize_disc(sc.radius_m, sc.mass_kg, sc.n_rings, sc.n_per_ring);
}

std::string samples_csv(const std::string& extra_header,
                        const SimOutput& run,
                        const std::function<std::string(const SimSample&)>& extra) {
  std::ostringstream csv;
  csv << "t,x,y,z,spin_vx,spin_vy,spin_vz,spin_ax,spin_ay,spin_az,ratio84"
      << extra_header << "\n";
  for (const auto& s : run.samples) {
    csv << cell(s.t) << ',' << cell(s.pos.x()) << ',' << cell(s.pos.y()) << ','
        << cell(s.pos.z()) << ',' << cell(s.spin_v.x()) << ','
        << cell(s.spin_v.y()) << ',' << cell(s.spin_v.z()) << ','
        << cell(s.spin_a.x()) << ',' << cell(s.spin_a.y()) << ','
        << cell(s.spin_a.z()) << ',' << cell(s.ratio84) << extra(s) << "\n";
  }
  return csv.str();
}

struct ScenarioResult {
  RunReport report;
  std::string csv;
};

ScenarioResult run_verify(const Scenario& sc) {
  ScenarioResult res;
  res.report = verify_all(sc.seed);
  std::ostringstream csv;
  csv << "name,computed,expected,tol,pass\n";
  for (const auto& c : res.report.checks) {
    csv << c.name << ',' << cell(c.computed) << ',' << cell(c.expected) << ','
        << cell(c.tol) << ',' << (c.pass ? 1 : 0) << "\n";
  }
  res.csv = csv.str();
  return res;
}

ScenarioResult run_precess(const Scenario& sc) {
  GravSource src;
  src.mass = sc.source_mass_kg;
  src.position = Vec3(sc.source_x_m, sc.source_y_m, sc.source_z_m);
  src.velocity = Vec3(sc.source_vx_m_s, sc.source_vy_m_s, sc.source_vz_m_s);
  src.angular_momentum = Vec3(sc.source_jx, sc.source_jy, sc.source_jz);
  GyroState gyro;
  gyro.position = Vec3(sc.gyro_x_m, sc.gyro_y_m, sc.gyro_z_m);
  gyro.velocity = Vec3(sc.gyro_vx_m_s, sc.gyro_vy_m_s, sc.gyro_vz_m_s);
  PpnParams p;
  p.gamma = sc.ppn_gamma;
  p.G = sc.G;
  p.c = sc.c_m_s;

  const std::vector<GravSource> sources{src};
  const Vec3 fw = omega_fermi_walker(gyro, sources, p);
  const Vec3 gy = omega_gyro(gyro, sources, p);
  const Vec3 st = omega_stars(gyro, sources, p);
  const Vec3 rel = omega_relative(gyro, sources, p);

  ScenarioResult res;
  std::ostringstream csv;
  csv << "formula,omega_x,omega_y,omega_z,magnitude\n";
  const auto row = [&csv](const char* name, const Vec3& v) {
    csv << name << ',' << cell(v.x()) << ',' << cell(v.y()) << ','
        << cell(v.z()) << ',' << cell(v.norm()) << "\n";
  };
  row("fermi_walker", fw);
  row("gyro", gy);
  row("stars", st);
  row("relative", rel);
  res.csv = csv.str();

  const double scale = std::max(gy.norm() + st.norm(), 1e-300);
  res.report.checks.push_back(make_check(
      "precess.relative_identity", (rel - (gy - st)).norm() / scale, 0.0, 1e-14));
  return res;
}

ScenarioResult run_freefall_kind(const Scenario& sc) {
  const BodyModel body = body_from_scenario(sc);
  EulerAngleLaw law;
  law.psi = ScalarLaw::constant(0.0);
  law.phi = ScalarLaw::polynomial({sc.phi_rad, sc.omega_big_rad_s, 0, 0});
  law.chi = ScalarLaw::polynomial({0.0, sc.w_rad_s, 0, 0});
  GravityContext gctx;
  gctx.g = Vec3(sc.gx, sc.gy, sc.gz);
  const SimOutput run = run_free_fall(body, law, gctx, sc.t_end_s, sc.h_s);

  const Vec3 ghat = gctx.g.normalized();
  const double g_mag = gctx.g.norm();
  const double w = sc.w_rad_s, om = sc.omega_big_rad_s;
  const double amplitude = g_mag * om * om / (w * w);
  double worst = 0.0;
  ScenarioResult res;
  res.csv = samples_csv(
      ",departure_sim,departure_closed", run, [&](const SimSample& s) {
        const double dep = ghat.dot(s.spin_a);
        const double pred = g_mag * om * om / (w * w) *
                            std::cos(2 * (sc.phi_rad + om * s.t));
        return "," + cell(dep) + "," + cell(pred);
      });
  for (std::size_t k = 1; k + 1 < run.samples.size(); ++k) {
    const auto& s = run.samples[k];
    const double dep = ghat.dot(s.spin_a);
    const double pred =
        g_mag * om * om / (w * w) * std::cos(2 * (sc.phi_rad + om * s.t));
    worst = std::max(worst, std::abs(dep - pred));
  }
  res.report.checks.push_back(make_check("freefall.departure_vs_closed_rel",
                                         worst / amplitude, 0.0, 0.02));
  double ratio_max = 0.0;
  for (const auto& s : run.samples) ratio_max = std::max(ratio_max, s.ratio84);
  res.report.checks.push_back(
      make_check("freefall.ratio84_max", ratio_max, 0.0, 1.0));
  return res;
}

ScenarioResult run_disc_kind(const Scenario& sc) {
  const BodyModel body = body_from_scenario(sc);
  EulerAngleLaw law;
  law.psi = ScalarLaw::polynomial({0.0, sc.omega_big_rad_s, 0, 0});
  law.phi = ScalarLaw::constant(sc.phi_rad);
  law.chi = ScalarLaw::polynomial({0.0, sc.w_rad_s, 0, 0});
  const double g_mag = std::abs(sc.gz);
  const SimOutput run =
      run_disc_on_plane(body, law, g_mag, sc.t_end_s, sc.h_s);

  ScenarioResult res;
  res.csv = samples_csv(",bx,by,bz,v_dot_b", run, [](const SimSample& s) {
    return "," + cell(s.axis_b.x()) + "," + cell(s.axis_b.y()) + "," +
           cell(s.axis_b.z()) + "," + cell(s.spin_v.dot(s.axis_b));
  });

  const double predicted =
      disc_circle_radius(sc.phi_rad, sc.w_rad_s, g_mag);
  res.report.checks.push_back(make_check("disc.fit_radius_m",
                                         run.fit->radius, predicted,
                                         0.02 * predicted));
  res.report.checks.push_back(make_check("disc.fit_angular_rate",
                                         run.fit->angular_rate,
                                         sc.omega_big_rad_s,
                                         0.01 * std::abs(sc.omega_big_rad_s)));
  return res;
}

ScenarioResult run_spindown_kind(const Scenario& sc) {
  const BodyModel body = body_from_scenario(sc);
  const double g_mag = std::abs(sc.gz);
  const SimOutput run = run_spin_down(body, sc.w1_rad_s, sc.w2_rad_s,
                                      sc.phi_rad, g_mag, sc.t_end_s, sc.h_s);
  ScenarioResult res;
  res.csv = samples_csv("", run, [](const SimSample&) { return std::string(); });
  const double predicted = std::abs(
      spin_down_displacement(sc.w1_rad_s, sc.w2_rad_s, g_mag, sc.phi_rad));
  res.report.checks.push_back(make_check("spindown.L_m",
                                         run.horizontal_displacement,
                                         predicted, 1e-6 * predicted));
  return res;
}

ScenarioResult run_invariants_kind(const Scenario& sc) {
  const BodyModel body = body_from_scenario(sc);
  EulerAngleLaw law;
  law.psi = ScalarLaw::polynomial({0.0, sc.omega_big_rad_s, 0, 0});
  law.phi = ScalarLaw::constant(sc.phi_rad);
  law.chi = ScalarLaw::polynomial({0.0, sc.w_rad_s, 0, 0});
  const MotionLaw mlaw = law;

  // Representative particle: the node farthest from the spin axis.
  std::size_t pick = 0;
  double best = -1.0;
  const Vec3 b0 = law.axis(0.0);
  for (std::size_t i = 0; i < body.nodes.size(); ++i) {
    const double rho = (body.nodes[i].pos - body.nodes[i].pos.dot(b0) * b0).norm();
    if (rho > best) {
      best = rho;
      pick = i;
    }
  }
  BodyModel one;
  one.shape = BodyShape::point_set;
  one.nodes.push_back(body.nodes[pick]);

  const int n_steps = static_cast<int>(std::llround(sc.t_end_s / sc.h_s));
  std::ostringstream csv;
  csv << "t,j1_free,j2_free,j1_converted,j2_converted,j3,j4\n";
  double worst = 0.0;
  for (int k = 0; k <= n_steps; ++k) {
    const double t = k * sc.h_s;
    const auto jets = rigid_trajectories(one, mlaw, t, sc.h_s);
    const auto frame = frenet_frame(jets[0]);
    if (!frame) continue;
    const double r = 1.0 / frame->k;
    const double ds = frame->s_rate * sc.h_s;
    FrameDifferential f;
    f.dxi = (r * frame->tau * frame->t + frame->b) * ds;
    f.deta = frame->t * ds;
    const JInvariants j0 = j_invariants(f, sc.c_m_s);
    const FrameDifferential conv = apply_basic_property(
        f, -frame->tau * ds * frame->t, -r * frame->n);
    const JInvariants j1 = j_invariants(conv, sc.c_m_s);
    const double scale = std::max(1.0, std::abs(j0.j1));
    worst = std::max(worst, std::abs(j1.j1 - j0.j1) / scale);
    worst = std::max(worst, std::abs(j1.j2 - j0.j2) / scale);
    csv << cell(t) << ',' << cell(j0.j1) << ',' << cell(j0.j2) << ','
        << cell(j1.j1) << ',' << cell(j1.j2) << ',' << cell(j0.j3) << ','
        << cell(j0.j4) << "\n";
  }
  ScenarioResult res;
  res.csv = csv.str();
  res.report.checks.push_back(
      make_check("invariants.conversion_preserves_J1_J2", worst, 0.0, 1e-12));
  return res;
}

}  // namespace

CheckResult make_check(const std::string& name, double computed,
                       double expected, double tol) {
  CheckResult c;
  c.name = name;
  c.computed = computed;
  c.expected = expected;
  c.tol = tol;
  c.pass = std::isfinite(computed) && std::abs(computed - expected) <= tol;
  return c;
}

bool RunReport::all_pass() const {
  return fail_count() == 0;
}

int RunReport::fail_count() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "CHECK " << c.name << " computed=" << fmt(c.computed)
        << " expected=" << fmt(c.expected) << " tol=" << fmt(c.tol) << ' '
        << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "SUMMARY checks=" << checks.size() << " failures=" << fail_count()
      << "\n";
  return out.str();
}

RunReport run_scenario(const Scenario& sc, const std::string& out_dir) {
  ScenarioResult res;
  switch (sc.kind) {
    case ScenarioKind::verify: res = run_verify(sc); break;
    case ScenarioKind::precess: res = run_precess(sc); break;
    case ScenarioKind::freefall: res = run_freefall_kind(sc); break;
    case ScenarioKind::disc: res = run_disc_kind(sc); break;
    case ScenarioKind::spindown: res = run_spindown_kind(sc); break;
    case ScenarioKind::invariants: res = run_invariants_kind(sc); break;
  }
  std::filesystem::create_directories(out_dir);
  write_file(out_dir + "/trajectory.csv", res.csv);
  write_file(out_dir + "/report.txt", res.report.to_text());
  return res.report;
}

}  // namespace triad
