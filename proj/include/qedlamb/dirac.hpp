#ifndef QEDLAMB_DIRAC_HPP
#define QEDLAMB_DIRAC_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qedlamb/constants.hpp"
#include "qedlamb/specfun.hpp"

namespace qedlamb {

// Bound-state labels.  Angular momenta are stored doubled so that
// half-integers stay exact: two_j = 2j, two_mj = 2m_j.  kappa_j = j + 1/2 is
// always positive here; sigma = +1 tags the branch with orbital angular
// momentum l = j - 1/2 (1S, 2S, 2P3/2, ...) and sigma = -1 the branch with
// l = j + 1/2 (2P1/2, ...).
struct QuantumNumbers {
  int n = 1;
  int two_j = 1;
  int two_mj = 1;
  int sigma = 1;

  int kappa_j() const { return (two_j + 1) / 2; }
  int n_r() const { return n - kappa_j(); }
  int l_upper() const { return (two_j - sigma) / 2; }
  int l_lower() const { return (two_j + sigma) / 2; }

  std::string label() const {
    static const char* letters = "spdfgh";
    const int l = l_upper();
    std::string s = std::to_string(n);
    s += (l < 6) ? letters[l] : '?';
    s += std::to_string(two_j);
    s += "/2";
    return s;
  }
};

inline void validate(const QuantumNumbers& qn) {
  if (qn.n < 1) {
    throw std::invalid_argument("QuantumNumbers: n must be >= 1");
  }
  if (qn.two_j < 1 || qn.two_j % 2 == 0) {
    throw std::invalid_argument("QuantumNumbers: two_j must be odd and positive");
  }
  if (std::abs(qn.two_mj) > qn.two_j || qn.two_mj % 2 == 0) {
    throw std::invalid_argument("QuantumNumbers: two_mj must be odd with |two_mj| <= two_j");
  }
  if (qn.sigma != 1 && qn.sigma != -1) {
    throw std::invalid_argument("QuantumNumbers: sigma must be +1 or -1");
  }
  if (qn.kappa_j() > qn.n) {
    throw std::invalid_argument("QuantumNumbers: requires j + 1/2 <= n");
  }
  if (qn.n_r() == 0 && qn.sigma != 1) {
    throw std::invalid_argument("QuantumNumbers: n_r = 0 exists only for sigma = +1");
  }
}

// Energy parameters of a Dirac-Coulomb level.  eps is the total energy in
// units of mc^2 and is independent of sigma, so 2S1/2 and 2P1/2 are exactly
// degenerate.  energy is eps times the configured rest energy.
struct DiracLevel {
  double gamma_j;
  double delta_j;
  double cal_n;
  double eps;
  double lambda;
  double energy;
};

inline DiracLevel level(int n, int two_j, const PhysicsConfig& cfg) {
  validate(cfg);
  QuantumNumbers probe{n, two_j, 1, 1};
  if (probe.kappa_j() > n || two_j < 1 || two_j % 2 == 0 || n < 1) {
    throw std::invalid_argument("level: invalid (n, two_j)");
  }
  const double kappa = probe.kappa_j();
  if (cfg.alpha >= kappa) {
    throw std::domain_error("level: alpha >= kappa_j, no bound state");
  }
  DiracLevel lv;
  lv.gamma_j = std::sqrt(kappa * kappa - cfg.alpha * cfg.alpha);
  lv.delta_j = cfg.alpha * cfg.alpha / (kappa + lv.gamma_j);
  const double nd = n - lv.delta_j;
  lv.cal_n = std::sqrt(nd * nd + cfg.alpha * cfg.alpha);
  lv.eps = nd / lv.cal_n;
  lv.lambda = cfg.alpha / (lv.cal_n * (1.0 + lv.eps));
  lv.energy = lv.eps * cfg.rest_energy;
  return lv;
}

inline DiracLevel level(const QuantumNumbers& qn, const PhysicsConfig& cfg) {
  validate(qn);
  return level(qn.n, qn.two_j, cfg);
}

// Radial-factor construction mode.  truncated replaces gamma_j by kappa_j
// and cal N by n throughout the radial factors (the leading-order
// simplification used by the closed-form expansions); normalization is
// preserved exactly in both modes.
enum class RadialMode { exact, truncated };

// Radial content of a bound state.  With rho = rho_scale * r (r in Compton
// wavelengths) the two radial functions are
//   R(rho) = rho_scale^{3/2} A e^{-rho/2} rho^{gamma-1} P(rho)
//   Q(rho) = rho_scale^{3/2} A e^{-rho/2} rho^{gamma-1} W(rho)
// and the density combinations K1 = P^2 + lambda^2 W^2, K2 = P W satisfy
//   A^2 sum_nu K1_nu Gamma(2 gamma + nu + 1) = 1.
struct RadialState {
  QuantumNumbers qn;
  DiracLevel lv;
  double gamma;       // gamma_j (exact) or kappa_j (truncated)
  double cal_n;       // cal N (exact) or n (truncated)
  double eps;
  double lambda;
  double norm_a;
  double rho_scale;   // 2 alpha / cal N
  std::vector<double> p_poly;
  std::vector<double> w_poly;
  std::vector<double> k1_coeffs;
  std::vector<double> k2_coeffs;
};

namespace dirac_detail {

inline std::vector<double> poly_lin(const std::vector<double>& a, double ca,
                                    const std::vector<double>& b, double cb) {
  std::vector<double> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += ca * a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += cb * b[i];
  return out;
}

inline std::vector<double> poly_mul(const std::vector<double>& a,
                                    const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace dirac_detail

inline RadialState radial_state(const QuantumNumbers& qn,
                                const PhysicsConfig& cfg,
                                RadialMode mode = RadialMode::exact) {
  validate(qn);
  RadialState st;
  st.qn = qn;
  st.lv = level(qn, cfg);
  const double kappa = qn.kappa_j();
  const int nr = qn.n_r();
  if (mode == RadialMode::exact) {
    st.gamma = st.lv.gamma_j;
    st.cal_n = st.lv.cal_n;
  } else {
    st.gamma = kappa;
    st.cal_n = qn.n;
  }
  st.eps = std::sqrt(1.0 - cfg.alpha * cfg.alpha / (st.cal_n * st.cal_n));
  st.lambda = cfg.alpha / (st.cal_n * (1.0 + st.eps));
  st.rho_scale = 2.0 * cfg.alpha / st.cal_n;

  const double two_gamma = 2.0 * st.gamma;
  const auto lag = laguerre_coefficients(nr, two_gamma);
  const auto lag_prev = laguerre_coefficients(nr - 1, two_gamma);
  using dirac_detail::poly_lin;
  if (qn.sigma == 1) {
    const double c = (nr + two_gamma) / (st.cal_n + kappa);
    st.p_poly = poly_lin(lag, 1.0, lag_prev, -c);
    st.w_poly = poly_lin(lag, 1.0, lag_prev, c);
  } else {
    const double u = std::sqrt(nr * (nr + two_gamma)) / (st.cal_n + kappa);
    const double v = std::sqrt((nr + two_gamma) / nr);
    st.p_poly = poly_lin(lag, u, lag_prev, -v);
    st.w_poly = poly_lin(lag, u, lag_prev, v);
  }
  const auto pp = dirac_detail::poly_mul(st.p_poly, st.p_poly);
  const auto ww = dirac_detail::poly_mul(st.w_poly, st.w_poly);
  st.k1_coeffs = poly_lin(pp, 1.0, ww, st.lambda * st.lambda);
  st.k2_coeffs = dirac_detail::poly_mul(st.p_poly, st.w_poly);

  double fact = 1.0;
  for (int i = 2; i <= nr; ++i) fact *= i;
  const double a_sq = (1.0 + st.eps) * (st.cal_n + kappa) * fact /
                      (4.0 * st.cal_n * gamma_fn(nr + 1.0 + two_gamma));
  st.norm_a = std::sqrt(a_sq);
  return st;
}

// Moment of the radial density in the dimensionless variable rho:
//   <rho^power> = A^2 sum_nu K1_nu Gamma(2 gamma + nu + power + 1).
// power = 0 recovers the normalization.  Moments in Compton-wavelength units
// follow by dividing by rho_scale^power.
inline double radial_density_moment(const RadialState& st, double power) {
  if (!(2.0 * st.gamma + power + 1.0 > 0.0)) {
    throw std::domain_error("radial_density_moment: power too negative");
  }
  double sum = 0.0;
  const double a_sq = st.norm_a * st.norm_a;
  for (std::size_t nu = 0; nu < st.k1_coeffs.size(); ++nu) {
    sum += st.k1_coeffs[nu] * gamma_fn(2.0 * st.gamma + nu + power + 1.0);
  }
  return a_sq * sum;
}

// Large and small radial functions at radius r (Compton wavelengths).  The
// bound four-spinor density is R^2 + lambda^2 Q^2 times the angular factors.
inline double radial_r(const RadialState& st, double r) {
  const double rho = st.rho_scale * r;
  if (!(rho > 0.0)) {
    throw std::domain_error("radial_r: requires r > 0");
  }
  const double pref = std::pow(st.rho_scale, 1.5) * st.norm_a *
                      std::exp(-0.5 * rho) * std::pow(rho, st.gamma - 1.0);
  return pref * poly_eval(st.p_poly, rho);
}

inline double radial_q(const RadialState& st, double r) {
  const double rho = st.rho_scale * r;
  if (!(rho > 0.0)) {
    throw std::domain_error("radial_q: requires r > 0");
  }
  const double pref = std::pow(st.rho_scale, 1.5) * st.norm_a *
                      std::exp(-0.5 * rho) * std::pow(rho, st.gamma - 1.0);
  return pref * poly_eval(st.w_poly, rho);
}

// State-dependent scale of the vacuum-correction potential argument,
// beta = (2 alpha / cal N) r0.
inline double beta_scale(const QuantumNumbers& qn, const PhysicsConfig& cfg) {
  const auto lv = level(qn, cfg);
  return (2.0 * cfg.alpha / lv.cal_n) * derived_scales(cfg).r0;
}

namespace dirac_detail {

// Spherical harmonic with explicit phase (-1)^((m+|m|)/2), no
// Condon-Shortley factor inside the Legendre part.
inline std::complex<double> sph_harmonic(int l, int m, double theta,
                                         double phi) {
  const double sign = (m > 0 && m % 2 != 0) ? -1.0 : 1.0;
  const double theta_part = normalized_legendre(l, m, theta);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return sign * theta_part * norm *
         std::exp(std::complex<double>(0.0, m * phi));
}

// Clebsch-Gordan weight of the Y_{l, (two_mj - two_ms)/2} term in the
// spherical spinor Omega_{j, l, mj}; two_ms is +1 or -1.
inline double spinor_weight(int two_j, int l, int two_mj, int two_ms) {
  const int two_l = 2 * l;
  if (two_j == two_l + 1) {
    const double num = (two_ms == 1) ? (two_l + two_mj + 1.0)
                                     : (two_l - two_mj + 1.0);
    return std::sqrt(num / (2.0 * two_l + 2.0));
  }
  const double num = (two_ms == 1) ? (two_l - two_mj + 1.0)
                                   : (two_l + two_mj + 1.0);
  const double sign = (two_ms == 1) ? -1.0 : 1.0;
  return sign * std::sqrt(num / (2.0 * two_l + 2.0));
}

}  // namespace dirac_detail

// Four-spinor value, components ordered (upper +1/2, upper -1/2,
// lower +1/2, lower -1/2) in the spin-z basis.
struct BispinorValue {
  std::array<std::complex<double>, 4> c;
};

// Assembles the bound four-spinor at (r, theta, phi), r in Compton
// wavelengths.  The upper pair is R Omega_{j, l, mj} with l = j - sigma/2;
// the lower pair is i lambda Q acting through sigma_r, which maps the
// spinor onto its opposite-parity partner with a minus sign.  An overall
// i^l phase follows the bound-state convention; it drops out of densities.
inline BispinorValue assemble_bispinor(const RadialState& st, double r,
                                       double theta, double phi) {
  using dirac_detail::sph_harmonic;
  using dirac_detail::spinor_weight;
  const QuantumNumbers& qn = st.qn;
  const int lu = qn.l_upper();
  const int ll = qn.l_lower();
  const double big_r = radial_r(st, r);
  const double small_q = st.lambda * radial_q(st, r);
  const std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> phase_u = std::pow(i_unit, lu % 4);
  std::complex<double> phase_l = std::pow(i_unit, ll % 4);

  BispinorValue out;
  for (int idx = 0; idx < 2; ++idx) {
    const int two_ms = (idx == 0) ? 1 : -1;
    const int m_y = (qn.two_mj - two_ms) / 2;
    std::complex<double> yu(0.0, 0.0);
    std::complex<double> yl(0.0, 0.0);
    if (std::abs(m_y) <= lu) {
      yu = spinor_weight(qn.two_j, lu, qn.two_mj, two_ms) *
           sph_harmonic(lu, m_y, theta, phi);
    }
    if (std::abs(m_y) <= ll) {
      yl = spinor_weight(qn.two_j, ll, qn.two_mj, two_ms) *
           sph_harmonic(ll, m_y, theta, phi);
    }
    out.c[idx] = phase_u * big_r * yu;
    out.c[2 + idx] = phase_l * i_unit * small_q * (-yl);
  }
  return out;
}

}  // namespace qedlamb

#endif  // QEDLAMB_DIRAC_HPP
