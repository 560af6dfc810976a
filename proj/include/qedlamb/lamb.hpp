#ifndef QEDLAMB_LAMB_HPP
#define QEDLAMB_LAMB_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qedlamb/constants.hpp"
#include "qedlamb/dirac.hpp"
#include "qedlamb/matrix_elements.hpp"
#include "qedlamb/potentials.hpp"

namespace qedlamb {

// Closed-form Lamb constant: C_L = ln(2m/lambda) + D.
inline constexpr double kLambAssemblyConstant = 0.400759;

// Measured 2S-2P splitting used for cutoff calibration, in MHz.
inline constexpr double kTargetExperimentMhz = 1057.845;

inline constexpr double kProtonElectronMassRatio = 1836.15267343;

// Reduced-mass ratio of the hydrogen electron.
inline constexpr double hydrogen_mass_factor() {
  return kProtonElectronMassRatio / (kProtonElectronMassRatio + 1.0);
}

inline const std::array<CorrectionKind, 4>& correction_kinds() {
  static const std::array<CorrectionKind, 4> kinds = {
      CorrectionKind::photon_polarization,
      CorrectionKind::electric_form_factor,
      CorrectionKind::magnetic_form_factor,
      CorrectionKind::vacuum_polarization,
  };
  return kinds;
}

// Lamb unit mc^2 alpha^5 / (6 pi), in mc^2 units.
inline double lamb_unit_energy(double alpha) {
  return std::pow(alpha, 5) / (6.0 * std::numbers::pi);
}

inline double lamb_unit_mhz(const PhysicsConfig& cfg) {
  return energy_to_frequency(lamb_unit_energy(cfg.alpha), cfg);
}

// Closed-form C_L for the configured cutoff.  The two-ln and explicit
// conventions take C_L = ln(2m/lambda) + D; the Schwinger-era variant carries
// its own additive constant, C_L = ln(2/alpha^2) - 2.8118.
inline double lamb_cl_closed(const PhysicsConfig& cfg) {
  if (cfg.cutoff.kind == IRCutoffKind::schwinger_shift) {
    return std::log(2.0 / (cfg.alpha * cfg.alpha)) + kSchwingerShift;
  }
  return cfg.cutoff.ln_2m_over_lambda(cfg.alpha) + kLambAssemblyConstant;
}

// Assembled C_L bracket with the explicit 1/8 - 1/5 terms, the alpha-order
// electric correction, and the sqrt(pi alpha / 30)-weighted vacuum term.
inline double lamb_cl_bracket(const PhysicsConfig& cfg) {
  const double alpha = cfg.alpha;
  const double lcut = cfg.cutoff.ln_2m_over_lambda(alpha);
  const double pi = std::numbers::pi;
  const double sqrt2 = std::numbers::sqrt2;
  const double ln2 = std::numbers::ln2;
  const double b2 = alpha * derived_scales(cfg).r0;
  const double bv = (8.0 / 3.0) * kEulerGamma + (8.0 / 3.0) * std::log(sqrt2 / b2) +
                    (4.0 * sqrt2 / 3.0) * std::log((sqrt2 + 1.0) / (sqrt2 - 1.0)) +
                    (5.0 / 3.0) * ln2 + pi / 3.0 + 22.0 / 9.0 + 10.0 * sqrt2 / 9.0;
  return lcut + 1.0 / 8.0 - 1.0 / 5.0 -
         (3.0 / 8.0) * ((5.0 * pi / 8.0) * (ln2 + lcut) - 11.0 * pi / 16.0) * alpha +
         0.25 * std::sqrt(pi * alpha / 30.0) * bv;
}

// Per-kind components of the level shift, indexed by the order of
// correction_kinds().  Totals accumulate in that index order.
struct CorrectionBreakdown {
  std::array<double, 4> quadrature{};
  std::array<double, 4> closed_form{};
  bool closed_available = false;
  double total_quadrature = 0.0;
  double total_closed_form = 0.0;
};

struct LevelShift {
  QuantumNumbers qn{};
  EvalMode mode = EvalMode::exact_quadrature;
  CorrectionBreakdown breakdown{};
  double total = 0.0;          // in the requested mode, mc^2 units
  double frequency_mhz = 0.0;  // total converted
};

// Total radiative shift of one level with its per-kind breakdown.  Both
// variants are evaluated; closed_available reflects whether the state has a
// closed-form expansion.  Requesting closed-form mode for a state without one
// propagates UnsupportedStateError.
inline LevelShift level_shift(const QuantumNumbers& qn, const PhysicsConfig& cfg,
                              EvalMode mode = EvalMode::exact_quadrature) {
  LevelShift out;
  out.qn = qn;
  out.mode = mode;
  auto& br = out.breakdown;
  for (std::size_t k = 0; k < correction_kinds().size(); ++k) {
    br.quadrature[k] = diagonal_element(qn, correction_kinds()[k], cfg);
    br.total_quadrature += br.quadrature[k];
  }
  try {
    double total = 0.0;
    std::array<double, 4> closed{};
    for (std::size_t k = 0; k < correction_kinds().size(); ++k) {
      closed[k] = closed_form_element(qn, correction_kinds()[k], cfg);
      total += closed[k];
    }
    br.closed_form = closed;
    br.total_closed_form = total;
    br.closed_available = true;
  } catch (const UnsupportedStateError&) {
    if (mode == EvalMode::closed_form) throw;
  }
  out.total = mode == EvalMode::closed_form ? br.total_closed_form
                                            : br.total_quadrature;
  out.frequency_mhz = energy_to_frequency(out.total, cfg);
  return out;
}

struct LambSplit {
  QuantumNumbers state_hi{};
  QuantumNumbers state_lo{};
  EvalMode mode = EvalMode::exact_quadrature;
  double delta = 0.0;      // mc^2 units
  double delta_mhz = 0.0;
  double c_l = 0.0;        // delta / (alpha^5 / 6 pi)
  IRCutoff cutoff_used{};
};

inline bool is_canonical_lamb_pair(const QuantumNumbers& a,
                                   const QuantumNumbers& b) {
  return a.n == 2 && a.two_j == 1 && a.sigma == +1 && b.n == 2 &&
         b.two_j == 1 && b.sigma == -1;
}

// Splitting Delta(a) - Delta(b).  For the canonical 2S 1/2 - 2P 1/2 pair in
// closed-form mode the splitting is assembled directly from C_L; otherwise it
// is the difference of the level totals in the requested mode.
inline LambSplit lamb_split(const QuantumNumbers& a, const QuantumNumbers& b,
                            const PhysicsConfig& cfg,
                            EvalMode mode = EvalMode::exact_quadrature) {
  validate(a);
  validate(b);
  LambSplit out;
  out.state_hi = a;
  out.state_lo = b;
  out.mode = mode;
  out.cutoff_used = cfg.cutoff;
  const double unit = lamb_unit_energy(cfg.alpha);
  if (mode == EvalMode::closed_form && is_canonical_lamb_pair(a, b)) {
    out.c_l = lamb_cl_closed(cfg);
    out.delta = unit * out.c_l;
  } else {
    out.delta = level_shift(a, cfg, mode).total - level_shift(b, cfg, mode).total;
    out.c_l = out.delta / unit;
  }
  out.delta_mhz = energy_to_frequency(out.delta, cfg);
  return out;
}

struct CalibrationResult {
  double ln_2m_over_lambda = 0.0;
  double offset_vs_ln_inv_alpha_sq = 0.0;
};

// Inverts Delta_L = (mc^2 alpha^5 / 6 pi)(ln(2m/lambda) + D) for the cutoff
// reproducing a measured splitting.
inline CalibrationResult calibrate_cutoff(double target_mhz,
                                          const PhysicsConfig& cfg) {
  if (!(target_mhz > 0.0)) {
    throw std::invalid_argument("calibrate_cutoff: requires target_mhz > 0");
  }
  CalibrationResult r;
  r.ln_2m_over_lambda = target_mhz / lamb_unit_mhz(cfg) - kLambAssemblyConstant;
  r.offset_vs_ln_inv_alpha_sq =
      r.ln_2m_over_lambda - 2.0 * std::log(1.0 / cfg.alpha);
  return r;
}

}  // namespace qedlamb

#endif  // QEDLAMB_LAMB_HPP
