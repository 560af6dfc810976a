#ifndef QEDLAMB_POTENTIALS_HPP
#define QEDLAMB_POTENTIALS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qedlamb/constants.hpp"
#include "qedlamb/dirac.hpp"
#include "qedlamb/quadrature.hpp"

namespace qedlamb {

// The four radiative correction channels.  The magnetic form factor couples
// the large and small radial components (odd number of angular factors); the
// other three are even densities.
enum class CorrectionKind {
  photon_polarization,
  electric_form_factor,
  magnetic_form_factor,
  vacuum_polarization,
};

inline bool angular_odd(CorrectionKind kind) {
  return kind == CorrectionKind::magnetic_form_factor;
}

inline const char* kind_name(CorrectionKind kind) {
  switch (kind) {
    case CorrectionKind::photon_polarization: return "photon-polarization";
    case CorrectionKind::electric_form_factor: return "electric-form-factor";
    case CorrectionKind::magnetic_form_factor: return "magnetic-form-factor";
    case CorrectionKind::vacuum_polarization: return "vacuum-polarization";
  }
  return "unknown";
}

// One evaluation of a correction potential at dimensionless radius rho,
// where rho = state_scale * r and r is in Compton wavelengths.  value is an
// energy density factor in mc^2 units.
struct PotentialSample {
  double rho;
  double value;
  CorrectionKind kind;
  double state_scale;
};

namespace pot_detail {

// Dispersion kernels over zeta in [1, inf).  Callers pass s = sqrt(z^2 - 1)
// computed in a cancellation-free way alongside z itself.
inline double k_pp(double z, double s) {
  return (1.0 + 1.0 / (2.0 * z * z)) * s / (z * z);
}

inline double h_mag(double z, double s) { return 1.0 / (z * z * s); }

inline double f_elec(double z, double s, double lcut) {
  const double big_log = 2.0 * lcut + 2.0 * std::numbers::ln2 + 2.0 * std::log(s);
  return (2.0 - 3.0 * z * z + (2.0 * z * z - 1.0) * big_log) / (z * z * s);
}

// 1 - e^(-w) (1 + w), evaluated by series for small w where the direct form
// cancels.
inline double one_minus_decay(double w) {
  if (w < 0.01) {
    double term = 0.5 * w * w;
    double sum = term;
    for (int m = 3; m < 12; ++m) {
      term *= -w / m;
      const double add = term * (m - 1.0);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return 1.0 - std::exp(-w) * (1.0 + w);
}

// G(x) = integral_0^inf e^(-u) kernel(1 + u/x) du with the substitution
// t = u/x, s = sqrt(t (2 + t)) feeding the kernel exactly.
template <typename Kernel>
double g_transform(const Kernel& kern, double x, const QuadratureSpec& spec) {
  QuadratureSpec local = spec;
  local.singular_endpoint_map = SingularMap::sqrt_lower;
  return integrate_segments(
      [&](double u) {
        const double t = u / x;
        const double s = std::sqrt(t * (2.0 + t));
        return std::exp(-u) * kern(1.0 + t, s);
      },
      {0.0, 0.5, 2.0, 5.0, 20.0, 60.0}, local);
}

// Laplace transform of h over [1, inf) via zeta = cosh(u).
inline double i_h(double x, const QuadratureSpec& spec) {
  if (x == 0.0) return 1.0;
  return integrate_segments(
      [&](double u) {
        const double c = std::cosh(u);
        return std::exp(-x * c) / (c * c);
      },
      {0.0, 0.5, 1.5, 3.0, 7.0, 20.0, 45.0}, spec);
}

// M(x) = integral_1^inf [1 - e^(-x z)(1 + x z)] h(z) dz, monotone from 0 to 1.
inline double m_transform(double x, const QuadratureSpec& spec) {
  return integrate_segments(
      [&](double u) {
        const double c = std::cosh(u);
        return one_minus_decay(x * c) / (c * c);
      },
      {0.0, 0.5, 1.5, 3.0, 7.0, 20.0, 45.0}, spec);
}

}  // namespace pot_detail

// Vacuum-correction radial profile.  The closed form is used below 2 beta;
// beyond that an alternating tail series avoids the cancellation the closed
// form develops at large rho.
inline double phi_tilde(double rho, double beta) {
  if (!(rho > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("phi_tilde: requires rho > 0 and beta > 0");
  }
  constexpr double sqrt2 = std::numbers::sqrt2;
  if (rho < 2.0 * beta) {
    const double r2 = rho * rho;
    const double b2 = beta * beta;
    const double lg = std::log((r2 - sqrt2 * beta * rho + b2) /
                               (r2 + sqrt2 * beta * rho + b2));
    const double at = std::atan(sqrt2 * rho / beta - 1.0) +
                      std::atan(sqrt2 * rho / beta + 1.0);
    return 1.0 / rho - std::numbers::pi / (2.0 * sqrt2 * beta) +
           lg / (4.0 * sqrt2 * beta) + at / (2.0 * sqrt2 * beta);
  }
  const double q = std::pow(beta / rho, 4);
  double term = std::pow(beta, 4) / std::pow(rho, 5);
  double sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    const double add = term / (4.0 * k + 5.0);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    term *= -q;
  }
  return sum;
}

// Photon-polarization (Uehling) energy correction sampled at rho for the
// given state's scale; rho = (2 alpha / cal N) r.
inline double uehling(double rho, const QuantumNumbers& qn,
                      const PhysicsConfig& cfg) {
  if (!(rho > 0.0)) throw std::domain_error("uehling: requires rho > 0");
  const auto lv = level(qn, cfg);
  const double a = cfg.alpha / lv.cal_n;
  const double x = rho / a;
  const double g = pot_detail::g_transform(pot_detail::k_pp, x, cfg.quadrature);
  const double f = std::exp(-x) / x * g;
  return -(4.0 * std::pow(cfg.alpha, 3) / (3.0 * std::numbers::pi * lv.cal_n)) *
         f / rho;
}

// Electric form-factor correction; carries the configured infrared cutoff.
inline double elec_ff(double rho, const QuantumNumbers& qn,
                      const PhysicsConfig& cfg) {
  if (!(rho > 0.0)) throw std::domain_error("elec_ff: requires rho > 0");
  const auto lv = level(qn, cfg);
  const double lcut = cfg.cutoff.ln_2m_over_lambda(cfg.alpha);
  const double a = cfg.alpha / lv.cal_n;
  const double x = rho / a;
  const double g = pot_detail::g_transform(
      [&](double z, double s) { return pot_detail::f_elec(z, s, lcut); }, x,
      cfg.quadrature);
  const double f = std::exp(-x) / x * g;
  return (std::pow(cfg.alpha, 3) / (std::numbers::pi * lv.cal_n)) * f / rho;
}

// Scalar radial factor of the magnetic form-factor correction.  Positive,
// with a power-law 1/rho^2 tail; the angular structure is supplied by the
// matrix-element assembly.
inline double mag_ff_radial(double rho, const QuantumNumbers& qn,
                            const PhysicsConfig& cfg) {
  if (!(rho > 0.0)) throw std::domain_error("mag_ff_radial: requires rho > 0");
  const auto lv = level(qn, cfg);
  const double a = cfg.alpha / lv.cal_n;
  const double x = rho / a;
  const double m = pot_detail::m_transform(x, cfg.quadrature);
  return (std::pow(cfg.alpha, 4) /
          (std::numbers::pi * lv.cal_n * lv.cal_n)) *
         m / (rho * rho);
}

// Vacuum correction as a function of r in Compton wavelengths.  Positive,
// approaching (alpha/3) / r below the r0 scale.
inline double vac_potential(double r, const PhysicsConfig& cfg) {
  const double r0 = derived_scales(cfg).r0;
  return (cfg.alpha / 3.0) * phi_tilde(r, r0);
}

// Radial derivative of vac_potential divided by alpha, available in closed
// form; d/dr vac_potential(r) = alpha * vac_field(r) exactly.
inline double vac_field(double r, const PhysicsConfig& cfg) {
  if (!(r > 0.0)) throw std::domain_error("vac_field: requires r > 0");
  const double r0 = derived_scales(cfg).r0;
  const double r0_4 = std::pow(r0, 4);
  return -(1.0 / 3.0) * r0_4 / (r * r * (std::pow(r, 4) + r0_4));
}

// Ratio of the exact Uehling tail to its leading asymptotic form, with the
// shared e^(-2r) factor cancelled so the comparison stays well conditioned
// at radii where both sides underflow.
inline double uehling_asymptotic_ratio(double r, const PhysicsConfig& cfg) {
  if (!(r > 0.0)) {
    throw std::domain_error("uehling_asymptotic_ratio: requires r > 0");
  }
  const double x = 2.0 * r;
  const double alpha2 = cfg.alpha * cfg.alpha;
  const double exact_no_exp =
      (2.0 * alpha2 / (3.0 * std::numbers::pi * r)) *
      pot_detail::g_transform(pot_detail::k_pp, x, cfg.quadrature) / x;
  const double branch_no_exp =
      (alpha2 / (4.0 * std::sqrt(std::numbers::pi))) * std::pow(r, -2.5);
  return exact_no_exp / branch_no_exp;
}

// Samples one correction channel at rho in the state's own scaling.  For the
// vacuum channel the value is (2 alpha^2 / 3 cal N) Phi_beta(rho), which is
// the same function as vac_potential expressed in the rho variable.
inline PotentialSample potential_sample(CorrectionKind kind, double rho,
                                        const QuantumNumbers& qn,
                                        const PhysicsConfig& cfg) {
  PotentialSample s;
  s.rho = rho;
  s.kind = kind;
  const auto lv = level(qn, cfg);
  s.state_scale = 2.0 * cfg.alpha / lv.cal_n;
  switch (kind) {
    case CorrectionKind::photon_polarization:
      s.value = uehling(rho, qn, cfg);
      break;
    case CorrectionKind::electric_form_factor:
      s.value = elec_ff(rho, qn, cfg);
      break;
    case CorrectionKind::magnetic_form_factor:
      s.value = mag_ff_radial(rho, qn, cfg);
      break;
    case CorrectionKind::vacuum_polarization: {
      const double beta = beta_scale(qn, cfg);
      s.value = (2.0 * cfg.alpha * cfg.alpha / (3.0 * lv.cal_n)) *
                phi_tilde(rho, beta);
      break;
    }
  }
  return s;
}

}  // namespace qedlamb

#endif  // QEDLAMB_POTENTIALS_HPP
