#ifndef QEDLAMB_CONSTANTS_HPP
#define QEDLAMB_CONSTANTS_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qedlamb/quadrature.hpp"

namespace qedlamb {

inline constexpr double kDefaultAlpha = 1.0 / 137.036;
inline constexpr double kRestEnergyEv = 510998.95;
inline constexpr double kPlanckEvS = 4.135667696e-15;
inline constexpr double kComptonWavelengthM = 3.8615926796e-13;
// Additive shift that turns 2 ln(1/alpha) into the hard-sphere style infrared
// cutoff ln(2/alpha^2) - 2.8118 used by the comparison variant.
inline constexpr double kSchwingerShift = -2.8118;

// Infrared cutoff convention for ln(2m/lambda_min).
enum class IRCutoffKind { two_ln_inv_alpha, schwinger_shift, explicit_value };

struct IRCutoff {
  IRCutoffKind kind = IRCutoffKind::two_ln_inv_alpha;
  double value = 0.0;  // used only by explicit_value

  static IRCutoff two_ln() { return {IRCutoffKind::two_ln_inv_alpha, 0.0}; }
  static IRCutoff schwinger() { return {IRCutoffKind::schwinger_shift, 0.0}; }
  static IRCutoff explicit_cut(double v) {
    return {IRCutoffKind::explicit_value, v};
  }

  double ln_2m_over_lambda(double alpha) const {
    switch (kind) {
      case IRCutoffKind::two_ln_inv_alpha:
        return 2.0 * std::log(1.0 / alpha);
      case IRCutoffKind::schwinger_shift:
        return 2.0 * std::log(1.0 / alpha) + kSchwingerShift;
      case IRCutoffKind::explicit_value:
        return value;
    }
    throw std::logic_error("IRCutoff: unknown kind");
  }
};

struct PhysicsConfig {
  double alpha = kDefaultAlpha;
  double rest_energy = kRestEnergyEv;                 // electron mc^2 in eV
  double planck_freq = kRestEnergyEv / kPlanckEvS;    // mc^2/h in Hz
  IRCutoff cutoff{};
  double mass_factor = 1.0;  // reduced-mass ratio in (0, 1]
  QuadratureSpec quadrature{};
};

inline void validate(const PhysicsConfig& cfg) {
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) {
    throw std::invalid_argument("PhysicsConfig: alpha must be positive");
  }
  if (!(cfg.mass_factor > 0.0 && cfg.mass_factor <= 1.0)) {
    throw std::invalid_argument("PhysicsConfig: mass_factor must lie in (0, 1]");
  }
  if (!(cfg.rest_energy > 0.0) || !(cfg.planck_freq > 0.0)) {
    throw std::invalid_argument("PhysicsConfig: energies must be positive");
  }
}

// Length scales derived from the coupling.  Lengths are in units of the
// reduced Compton wavelength hbar/mc except compton_wavelength itself, which
// is in metres.  r0 is the vacuum-correction length (2 alpha^3 / 15 pi)^(1/4).
struct DerivedScales {
  double compton_wavelength;
  double bohr_radius;
  double r0;
};

inline DerivedScales derived_scales(const PhysicsConfig& cfg) {
  validate(cfg);
  DerivedScales s;
  s.compton_wavelength = kComptonWavelengthM;
  s.bohr_radius = 1.0 / cfg.alpha;
  s.r0 = std::pow(2.0 * std::pow(cfg.alpha, 3) / (15.0 * std::numbers::pi), 0.25);
  return s;
}

// Converts an energy in units of mc^2 to a frequency in MHz, including the
// reduced-mass factor.  Exactly linear in its first argument.
inline double energy_to_frequency(double energy_mc2, const PhysicsConfig& cfg) {
  return energy_mc2 * cfg.mass_factor * cfg.planck_freq * 1e-6;
}

// Parses a cutoff token: "two-ln", "schwinger", or "explicit:<value>".
inline IRCutoff parse_cutoff(const std::string& token) {
  if (token == "two-ln") return IRCutoff::two_ln();
  if (token == "schwinger") return IRCutoff::schwinger();
  if (token.rfind("explicit:", 0) == 0) {
    const std::string num = token.substr(9);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(num, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_cutoff: bad explicit value '" + num + "'");
    }
    if (pos != num.size()) {
      throw std::invalid_argument("parse_cutoff: bad explicit value '" + num + "'");
    }
    return IRCutoff::explicit_cut(v);
  }
  throw std::invalid_argument("parse_cutoff: unknown cutoff '" + token + "'");
}

inline std::string cutoff_name(const IRCutoff& c) {
  switch (c.kind) {
    case IRCutoffKind::two_ln_inv_alpha:
      return "two-ln";
    case IRCutoffKind::schwinger_shift:
      return "schwinger";
    case IRCutoffKind::explicit_value:
      return "explicit:" + std::to_string(c.value);
  }
  return "unknown";
}

namespace cfg_detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad numeric value for '" + key + "'");
  }
  if (pos != value.size()) {
    throw std::runtime_error("config: bad numeric value for '" + key + "'");
  }
  return v;
}

}  // namespace cfg_detail

// Applies one "key = value" assignment to a config.  Unknown keys are an
// error so typos cannot silently fall back to defaults.
inline void apply_config_entry(PhysicsConfig& cfg, const std::string& key,
                               const std::string& value) {
  using cfg_detail::parse_double;
  if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "rest_energy") {
    cfg.rest_energy = parse_double(key, value);
  } else if (key == "planck_freq") {
    cfg.planck_freq = parse_double(key, value);
  } else if (key == "mass_factor") {
    cfg.mass_factor = parse_double(key, value);
  } else if (key == "cutoff") {
    cfg.cutoff = parse_cutoff(value);
  } else if (key == "rel_tol") {
    cfg.quadrature.rel_tol = parse_double(key, value);
  } else if (key == "abs_tol") {
    cfg.quadrature.abs_tol = parse_double(key, value);
  } else if (key == "max_subdivisions") {
    cfg.quadrature.max_subdivisions =
        static_cast<int>(parse_double(key, value));
  } else {
    throw std::runtime_error("config: unknown key '" + key + "'");
  }
}

// Loads "key = value" lines ('#' starts a comment, blank lines allowed) on
// top of the supplied defaults.
inline PhysicsConfig load_config(const std::string& path,
                                 PhysicsConfig base = {}) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open '" + path + "'");
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = cfg_detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " has no '='");
    }
    const std::string key = cfg_detail::trim(body.substr(0, eq));
    const std::string value = cfg_detail::trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " is malformed");
    }
    apply_config_entry(base, key, value);
  }
  validate(base);
  return base;
}

// Path from the QEDLAMB_CONFIG environment variable, if set and nonempty.
inline std::optional<std::string> config_path_from_env() {
  const char* p = std::getenv("QEDLAMB_CONFIG");
  if (p == nullptr || *p == '\0') return std::nullopt;
  return std::string(p);
}

}  // namespace qedlamb

#endif  // QEDLAMB_CONSTANTS_HPP
