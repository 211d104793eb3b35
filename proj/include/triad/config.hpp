// Scenario configuration: an INI-style key-value tree with sections
// mirroring the module names.  Unknown keys are rejected with a nearest-key
// suggestion; validation failures name the offending key path.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace triad {

enum class ScenarioKind { verify, precess, freefall, disc, spindown, invariants };

struct Scenario {
  ScenarioKind kind = ScenarioKind::verify;

  // [body]
  std::string body_shape = "sphere";  // sphere | disc | hoop
  double radius_m = 0.1;
  double mass_kg = 1.0;
  int n_rings = 32;
  int n_per_ring = 64;

  // [motion]
  double phi_rad = 0.7853981633974483;  // pi/4
  double omega_big_rad_s = 2.0;         // axis precession rate
  double w_rad_s = 50.0;                // spin rate
  double w1_rad_s = 100.0;              // spin-down start
  double w2_rad_s = 50.0;               // spin-down end

  // [gravity]
  double gx = 0.0, gy = 0.0, gz = -9.81;

  // [numeric]
  double h_s = 1e-3;
  double t_end_s = 10.0;

  // [constants]
  double c_m_s = 299792458.0;
  double G = 6.67430e-11;

  // [precess]
  double source_mass_kg = 5.972e24;
  double source_x_m = 0.0, source_y_m = 0.0, source_z_m = 0.0;
  double source_vx_m_s = 0.0, source_vy_m_s = 0.0, source_vz_m_s = 0.0;
  double source_jx = 0.0, source_jy = 0.0, source_jz = 0.0;
  double gyro_x_m = 7.0e6, gyro_y_m = 0.0, gyro_z_m = 0.0;
  double gyro_vx_m_s = 0.0, gyro_vy_m_s = 0.0, gyro_vz_m_s = 0.0;
  double ppn_gamma = 1.0;

  std::uint64_t seed = 0;
};

/// Configuration error carrying the offending key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key_path, const std::string& message)
      : std::runtime_error("config: " + key_path + ": " + message),
        key_path_(key_path) {}
  const std::string& key_path() const { return key_path_; }

 private:
  std::string key_path_;
};

/// Parses an INI-style document ([section] headers, key = value lines,
/// '#'/';' comments; dotted keys also accepted).  Unknown keys are rejected,
/// suggesting the nearest known key when the edit distance is at most 2.
Scenario parse_config(const std::string& text);

/// Reads and parses a configuration file; throws std::runtime_error on IO
/// failure.
Scenario parse_config_file(const std::string& path);

std::string to_string(ScenarioKind kind);

}  // namespace triad
