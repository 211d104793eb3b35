#include "triad/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace triad {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

struct Field {
  std::string key;
  std::function<void(Scenario&, const std::string&, const std::string&)> set;
};

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  int x = 0;
  const auto* begin = v.data();
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(begin, end, x);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  }
  return x;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + v + "'");
  }
  return x;
}

const std::vector<Field>& schema() {
  auto num = [](double Scenario::* member) {
    return [member](Scenario& s, const std::string& k, const std::string& v) {
      s.*member = parse_double(k, v);
    };
  };
  auto integer = [](int Scenario::* member) {
    return [member](Scenario& s, const std::string& k, const std::string& v) {
      s.*member = parse_int(k, v);
    };
  };
  static const std::vector<Field> fields = {
      {"scenario.kind",
       [](Scenario& s, const std::string& k, const std::string& v) {
         if (v == "verify") s.kind = ScenarioKind::verify;
         else if (v == "precess") s.kind = ScenarioKind::precess;
         else if (v == "freefall") s.kind = ScenarioKind::freefall;
         else if (v == "disc") s.kind = ScenarioKind::disc;
         else if (v == "spindown") s.kind = ScenarioKind::spindown;
         else if (v == "invariants") s.kind = ScenarioKind::invariants;
         else
           throw ConfigError(k, "unknown kind '" + v +
                                    "' (verify|precess|freefall|disc|spindown|"
                                    "invariants)");
       }},
      {"body.shape",
       [](Scenario& s, const std::string& k, const std::string& v) {
         if (v != "sphere" && v != "disc" && v != "hoop") {
           throw ConfigError(k, "unknown shape '" + v + "' (sphere|disc|hoop)");
         }
         s.body_shape = v;
       }},
      {"body.radius_m", num(&Scenario::radius_m)},
      {"body.mass_kg", num(&Scenario::mass_kg)},
      {"body.n_rings", integer(&Scenario::n_rings)},
      {"body.n_per_ring", integer(&Scenario::n_per_ring)},
      {"motion.phi_rad", num(&Scenario::phi_rad)},
      {"motion.omega_big_rad_s", num(&Scenario::omega_big_rad_s)},
      {"motion.w_rad_s", num(&Scenario::w_rad_s)},
      {"motion.w1_rad_s", num(&Scenario::w1_rad_s)},
      {"motion.w2_rad_s", num(&Scenario::w2_rad_s)},
      {"gravity.gx", num(&Scenario::gx)},
      {"gravity.gy", num(&Scenario::gy)},
      {"gravity.gz", num(&Scenario::gz)},
      {"numeric.h_s", num(&Scenario::h_s)},
      {"numeric.t_end_s", num(&Scenario::t_end_s)},
      {"constants.c_m_s", num(&Scenario::c_m_s)},
      {"constants.G", num(&Scenario::G)},
      {"precess.source_mass_kg", num(&Scenario::source_mass_kg)},
      {"precess.source_x_m", num(&Scenario::source_x_m)},
      {"precess.source_y_m", num(&Scenario::source_y_m)},
      {"precess.source_z_m", num(&Scenario::source_z_m)},
      {"precess.source_vx_m_s", num(&Scenario::source_vx_m_s)},
      {"precess.source_vy_m_s", num(&Scenario::source_vy_m_s)},
      {"precess.source_vz_m_s", num(&Scenario::source_vz_m_s)},
      {"precess.source_jx", num(&Scenario::source_jx)},
      {"precess.source_jy", num(&Scenario::source_jy)},
      {"precess.source_jz", num(&Scenario::source_jz)},
      {"precess.gyro_x_m", num(&Scenario::gyro_x_m)},
      {"precess.gyro_y_m", num(&Scenario::gyro_y_m)},
      {"precess.gyro_z_m", num(&Scenario::gyro_z_m)},
      {"precess.gyro_vx_m_s", num(&Scenario::gyro_vx_m_s)},
      {"precess.gyro_vy_m_s", num(&Scenario::gyro_vy_m_s)},
      {"precess.gyro_vz_m_s", num(&Scenario::gyro_vz_m_s)},
      {"precess.gamma", num(&Scenario::ppn_gamma)},
      {"seed",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.seed = parse_u64(k, v);
       }},
  };
  return fields;
}

void validate(const Scenario& s) {
  const auto positive = [](double v, const char* key) {
    if (!(v > 0.0)) {
      throw ConfigError(key, "must be positive");
    }
  };
  positive(s.h_s, "numeric.h_s");
  positive(s.t_end_s, "numeric.t_end_s");
  positive(s.radius_m, "body.radius_m");
  positive(s.mass_kg, "body.mass_kg");
  positive(s.c_m_s, "constants.c_m_s");
  positive(s.G, "constants.G");
  if (s.n_rings < 1) throw ConfigError("body.n_rings", "must be positive");
  if (s.n_per_ring < 8) {
    throw ConfigError("body.n_per_ring", "must be at least 8");
  }
  if (s.kind == ScenarioKind::spindown &&
      (s.w1_rad_s == 0.0 || s.w2_rad_s == 0.0 ||
       s.w1_rad_s * s.w2_rad_s < 0.0)) {
    throw ConfigError("motion.w1_rad_s",
                      "spin-down rates must be nonzero with equal signs");
  }
  if ((s.kind == ScenarioKind::disc || s.kind == ScenarioKind::invariants) &&
      !(s.w_rad_s > 0.0)) {
    throw ConfigError("motion.w_rad_s", "must be positive for this kind");
  }
}

}  // namespace

Scenario parse_config(const std::string& text) {
  Scenario s;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no),
                          "malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool bare = key.find('.') == std::string::npos;
    if (bare && !section.empty()) {
      key = section + "." + key;
    }
    const auto& fields = schema();
    auto it = std::find_if(fields.begin(), fields.end(),
                           [&key](const Field& f) { return f.key == key; });
    if (it == fields.end() && bare && !section.empty()) {
      // Top-level keys (e.g. seed) are also accepted inside a section.
      const std::string stripped = key.substr(section.size() + 1);
      const auto it2 =
          std::find_if(fields.begin(), fields.end(),
                       [&stripped](const Field& f) { return f.key == stripped; });
      if (it2 != fields.end()) it = it2;
    }
    if (it == fields.end()) {
      int best = 3;
      std::string suggestion;
      for (const auto& f : fields) {
        const int d = edit_distance(key, f.key);
        if (d < best) {
          best = d;
          suggestion = f.key;
        }
      }
      std::string msg = "unknown key";
      if (!suggestion.empty()) msg += " - did you mean '" + suggestion + "'?";
      throw ConfigError(key, msg);
    }
    it->set(s, key, value);
  }
  validate(s);
  return s;
}

Scenario parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::verify: return "verify";
    case ScenarioKind::precess: return "precess";
    case ScenarioKind::freefall: return "freefall";
    case ScenarioKind::disc: return "disc";
    case ScenarioKind::spindown: return "spindown";
    case ScenarioKind::invariants: return "invariants";
  }
  return "?";
}

}  // namespace triad
