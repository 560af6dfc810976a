#ifndef QEDLAMB_MATRIX_ELEMENTS_HPP
#define QEDLAMB_MATRIX_ELEMENTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qedlamb/constants.hpp"
#include "qedlamb/dirac.hpp"
#include "qedlamb/potentials.hpp"
#include "qedlamb/quadrature.hpp"
#include "qedlamb/specfun.hpp"

namespace qedlamb {

// Breakpoints in u for zeta = cosh(u); the integrands decay at least like
// e^(-u) beyond the last point.
inline const std::vector<double>& cosh_breakpoints() {
  static const std::vector<double> pts = {0.0, 0.5, 1.5, 3.0, 7.0,
                                          15.0, 35.0, 60.0};
  return pts;
}

// Kernel moment C_mu(a) = integral_1^inf kernel(zeta) / (zeta + a)^mu dzeta
// with zeta = cosh(u) so the sqrt(zeta^2 - 1) endpoint factor stays exact.
// a = 0 gives the limit coefficients of the closed-form alpha-expansions.
// The vacuum correction has no zeta kernel.
inline double kernel_moment(CorrectionKind kind, double mu, double a,
                            const PhysicsConfig& cfg) {
  if (kind == CorrectionKind::vacuum_polarization) {
    throw std::domain_error("kernel_moment: no zeta kernel for the vacuum correction");
  }
  if (!(mu > 0.0) || !(a >= 0.0)) {
    throw std::domain_error("kernel_moment: requires mu > 0 and a >= 0");
  }
  const double lcut = cfg.cutoff.ln_2m_over_lambda(cfg.alpha);
  auto f = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double z = std::cosh(u);
    const double s = std::sinh(u);
    double kern = 0.0;
    switch (kind) {
      case CorrectionKind::photon_polarization:
        kern = pot_detail::k_pp(z, s);
        break;
      case CorrectionKind::electric_form_factor:
        kern = pot_detail::f_elec(z, s, lcut);
        break;
      default:
        kern = pot_detail::h_mag(z, s);
        break;
    }
    return kern * s / std::pow(z + a, mu);
  };
  return integrate_segments(f, cosh_breakpoints(), cfg.quadrature);
}

// B_mu(a) = 1 - mu a^(mu-1) C^mag_(mu-1)(a) + (mu-1) a^mu C^mag_mu(a), the
// Gamma-moment reduction of the magnetic kernel transform M.
inline double mag_b_mu(double mu, double a, const PhysicsConfig& cfg) {
  const auto mag = CorrectionKind::magnetic_form_factor;
  return 1.0 - mu * std::pow(a, mu - 1.0) * kernel_moment(mag, mu - 1.0, a, cfg) +
         (mu - 1.0) * std::pow(a, mu) * kernel_moment(mag, mu, a, cfg);
}

struct VacJResult {
  double path_direct = 0.0;
  double path_reduction = 0.0;
  bool reduction_available = false;
};

// J_mu(beta) = integral_0^inf Phi_beta(rho) e^(-rho) rho^mu drho.  Path (a)
// integrates the profile directly.  For integer mu >= 2 path (b) evaluates
//   J_mu = Re integral_0^1 c^2 t^2 E_(mu-1)(c t) dt,   c^2 = i beta^2,
// with E_0(z) = f(z)/z, E_1(z) = g(z), E_m(z) = Gamma(m-1) - z^2 E_(m-2)(z)
// built from the auxiliary sine/cosine-integral functions.
inline VacJResult vac_j_integral(double mu, double beta,
                                 const PhysicsConfig& cfg) {
  if (!(mu > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("vac_j_integral: requires mu > 0 and beta > 0");
  }
  VacJResult out;

  std::set<double> inner;
  for (double p : {beta / 10.0, beta, 10.0 * beta, 100.0 * beta, 1.0, 5.0, 20.0, 60.0}) {
    if (p > 0.0 && std::isfinite(p)) inner.insert(p);
  }
  std::vector<double> pts;
  pts.push_back(0.0);
  pts.insert(pts.end(), inner.begin(), inner.end());
  pts.push_back(std::numeric_limits<double>::infinity());
  auto fd = [&](double rho) {
    if (rho <= 0.0) return 0.0;
    return phi_tilde(rho, beta) * std::exp(-rho) * std::pow(rho, mu);
  };
  QuadratureSpec spec = cfg.quadrature;
  spec.singular_endpoint_map = SingularMap::exp_upper;
  out.path_direct = integrate_segments(fd, pts, spec);

  const double mu_round = std::round(mu);
  if (std::abs(mu - mu_round) < 1e-12 && mu_round >= 2.0) {
    const int m = static_cast<int>(mu_round);
    const std::complex<double> c2(0.0, beta * beta);
    const std::complex<double> c = std::sqrt(c2);
    auto ft = [&](double t) {
      if (t <= 0.0) return 0.0;
      const std::complex<double> z = c * t;
      std::vector<std::complex<double>> e(m);
      e[0] = aux_f(z) / z;
      if (m >= 2) e[1] = aux_g(z);
      for (int k = 2; k < m; ++k) {
        e[k] = gamma_fn(static_cast<double>(k - 1)) - z * z * e[k - 2];
      }
      return (c2 * t * t * e[m - 1]).real();
    };
    out.path_reduction =
        integrate_segments(ft, {0.0, 0.1, 0.5, 1.0}, cfg.quadrature);
    out.reduction_available = true;
  }
  return out;
}

// Requested closed form is not tabulated for this state.
class UnsupportedStateError : public std::invalid_argument {
 public:
  explicit UnsupportedStateError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Closed-form alpha-expansions for the whole j = n - 1/2, sigma = + family,
// valid for any n.  The limit coefficients C(0) are evaluated by quadrature.
inline double closed_family_element(int n, CorrectionKind kind,
                                    const PhysicsConfig& cfg) {
  if (n < 1) throw std::invalid_argument("closed_family_element: requires n >= 1");
  const double alpha = cfg.alpha;
  const double pi = std::numbers::pi;
  const double dn = static_cast<double>(n);
  if (kind == CorrectionKind::electric_form_factor) {
    const double c_even = kernel_moment(kind, 2.0 * dn, 0.0, cfg);
    return std::pow(alpha, 2 * n + 3) / (2.0 * pi * std::pow(dn, 2 * n + 2)) *
           c_even;
  }
  if (kind == CorrectionKind::magnetic_form_factor) {
    const double a = alpha / dn;
    const double c_odd = kernel_moment(kind, 2.0 * dn - 1.0, 0.0, cfg);
    const double c_even = kernel_moment(kind, 2.0 * dn, 0.0, cfg);
    return std::pow(alpha, 5) / (2.0 * pi * std::pow(dn, 4) * (2.0 * dn - 1.0)) *
           (1.0 - 2.0 * dn * c_odd * std::pow(a, 2 * n - 1) +
            (2.0 * dn - 1.0) * c_even * std::pow(a, 2 * n));
  }
  throw UnsupportedStateError(
      "closed_family_element: family form only for the electric and magnetic kinds");
}

// Closed-form alpha-expansion of a diagonal element.  The 1S, 2S, 2P 1/2 and
// 2P 3/2 states carry per-state expansions for all four kinds; other j = n - 1/2
// states fall back to the family forms above.
inline double closed_form_element(const QuantumNumbers& qn, CorrectionKind kind,
                                  const PhysicsConfig& cfg) {
  validate(qn);
  const double a = cfg.alpha;
  const double pi = std::numbers::pi;
  const double lcut = cfg.cutoff.ln_2m_over_lambda(a);
  const bool is_1s = qn.n == 1 && qn.two_j == 1 && qn.sigma == +1;
  const bool is_2s = qn.n == 2 && qn.two_j == 1 && qn.sigma == +1;
  const bool is_2p12 = qn.n == 2 && qn.two_j == 1 && qn.sigma == -1;
  const bool is_2p32 = qn.n == 2 && qn.two_j == 3 && qn.sigma == +1;

  if (!(is_1s || is_2s || is_2p12 || is_2p32)) {
    if (qn.sigma == +1 && qn.two_j == 2 * qn.n - 1 &&
        (kind == CorrectionKind::electric_form_factor ||
         kind == CorrectionKind::magnetic_form_factor)) {
      return closed_family_element(qn.n, kind, cfg);
    }
    throw UnsupportedStateError("closed_form_element: no tabulated expansion for " +
                                qn.label());
  }

  switch (kind) {
    case CorrectionKind::photon_polarization: {
      if (is_1s) return -4.0 * std::pow(a, 5) / (15.0 * pi);
      if (is_2s)
        return -(std::pow(a, 5) / (6.0 * pi)) *
               (1.0 / 5.0 - (15.0 * pi / 128.0) * a);
      if (is_2p12)
        return -(std::pow(a, 7) / (32.0 * pi)) *
               (9.0 / 35.0 + (5.0 * pi / 128.0) * a);
      return -std::pow(a, 7) / (560.0 * pi);
    }
    case CorrectionKind::electric_form_factor: {
      if (is_1s) return (4.0 * std::pow(a, 5) / (3.0 * pi)) * (lcut - 3.0 / 8.0);
      if (is_2s)
        return (std::pow(a, 5) / (6.0 * pi)) *
               (lcut - 3.0 / 8.0 - (3.0 * pi / 64.0) * (5.0 * lcut - 7.0) * a);
      if (is_2p12)
        return (std::pow(a, 7) / (16.0 * pi)) *
               ((7.0 / 10.0) * lcut - 89.0 / 240.0 +
                (a / 6.0) * (pi / 8.0) * (5.0 * lcut - 7.0));
      return (std::pow(a, 7) / (80.0 * pi)) * (lcut - 11.0 / 12.0);
    }
    case CorrectionKind::magnetic_form_factor: {
      if (is_1s)
        return (std::pow(a, 5) / (2.0 * pi)) *
               (1.0 - (pi / 2.0) * a + (2.0 / 3.0) * a * a);
      if (is_2s)
        return (std::pow(a, 5) / (6.0 * pi)) * (3.0 / 8.0) *
               (1.0 - (pi / 2.0) * a);
      if (is_2p12)
        return -(std::pow(a, 5) / (48.0 * pi)) * (1.0 + (3.0 / 8.0) * a * a);
      return (std::pow(a, 5) / (96.0 * pi)) *
             (1.0 - (3.0 * pi / 32.0) * std::pow(a, 3) +
              (3.0 / 16.0) * (8.0 / 15.0) * std::pow(a, 4));
    }
    case CorrectionKind::vacuum_polarization: {
      const double sqrt2 = std::numbers::sqrt2;
      const double b1 = 2.0 * a * derived_scales(cfg).r0;
      const double b2 = b1 / 2.0;
      if (is_1s) {
        const double br1 = (2.0 / 3.0) * kEulerGamma +
                           (2.0 / 3.0) * std::log(sqrt2 / b1) +
                           (sqrt2 / 3.0) * std::log((sqrt2 + 1.0) / (sqrt2 - 1.0)) +
                           (5.0 / 12.0) * std::numbers::ln2 + pi / 12.0 - 1.0 / 3.0;
        return (a * a / 3.0) * br1 * (b1 * b1 / 2.0);
      }
      if (is_2s) {
        const double br2 = (8.0 / 3.0) * kEulerGamma +
                           (8.0 / 3.0) * std::log(sqrt2 / b2) +
                           (4.0 * sqrt2 / 3.0) *
                               std::log((sqrt2 + 1.0) / (sqrt2 - 1.0)) +
                           (5.0 / 3.0) * std::numbers::ln2 + pi / 3.0 + 4.0 / 3.0 +
                           5.0 * sqrt2 / 3.0;
        return (a * a / 24.0) * br2 * (b2 * b2 / 2.0);
      }
      if (is_2p12)
        return -(std::pow(a, 5) / (48.0 * pi)) * (1.0 + (3.0 / 8.0) * a * a);
      return -(5.0 * a * a / 216.0) * (2.0 - sqrt2) * (b2 * b2 / 2.0);
    }
  }
  throw std::logic_error("closed_form_element: unreachable");
}

enum class EvalMode { exact_quadrature, closed_form };

// Diagonal element <state| V |state> in mc^2 units.  Exact mode assembles the
// Gamma-moment sums over the squared Dirac radial density; closed mode returns
// the alpha-expansion.
inline double diagonal_element(const QuantumNumbers& qn, CorrectionKind kind,
                               const PhysicsConfig& cfg,
                               EvalMode mode = EvalMode::exact_quadrature) {
  if (mode == EvalMode::closed_form) return closed_form_element(qn, kind, cfg);
  const RadialState st = radial_state(qn, cfg, RadialMode::exact);
  const double alpha = cfg.alpha;
  const double two_gamma = 2.0 * st.gamma;
  const double a_sq = st.norm_a * st.norm_a;
  const double a_par = alpha / st.cal_n;
  const double pi = std::numbers::pi;
  switch (kind) {
    case CorrectionKind::photon_polarization:
    case CorrectionKind::electric_form_factor: {
      double sum = 0.0;
      for (std::size_t nu = 0; nu < st.k1_coeffs.size(); ++nu) {
        if (st.k1_coeffs[nu] == 0.0) continue;
        const double mu = two_gamma + static_cast<double>(nu);
        sum += st.k1_coeffs[nu] * gamma_fn(mu) * std::pow(a_par, mu) *
               kernel_moment(kind, mu, a_par, cfg);
      }
      if (kind == CorrectionKind::photon_polarization) {
        return -(4.0 * std::pow(alpha, 3) / (3.0 * pi * st.cal_n)) * a_sq * sum;
      }
      return (std::pow(alpha, 3) / (pi * st.cal_n)) * a_sq * sum;
    }
    case CorrectionKind::magnetic_form_factor: {
      double sum = 0.0;
      for (std::size_t nu = 0; nu < st.k2_coeffs.size(); ++nu) {
        if (st.k2_coeffs[nu] == 0.0) continue;
        const double mu = two_gamma + static_cast<double>(nu);
        sum += st.k2_coeffs[nu] * gamma_fn(mu - 1.0) * mag_b_mu(mu, a_par, cfg);
      }
      return 2.0 * st.lambda * a_sq *
             (std::pow(alpha, 4) / (pi * st.cal_n * st.cal_n)) * sum;
    }
    case CorrectionKind::vacuum_polarization: {
      const double beta = beta_scale(qn, cfg);
      double sum = 0.0;
      for (std::size_t nu = 0; nu < st.k1_coeffs.size(); ++nu) {
        if (st.k1_coeffs[nu] == 0.0) continue;
        const double mu = two_gamma + static_cast<double>(nu);
        sum += st.k1_coeffs[nu] * vac_j_integral(mu, beta, cfg).path_direct;
      }
      return (2.0 * alpha * alpha / (3.0 * st.cal_n)) * a_sq * sum;
    }
  }
  throw std::logic_error("diagonal_element: unreachable");
}

struct MatrixElementResult {
  QuantumNumbers qn;
  CorrectionKind kind = CorrectionKind::photon_polarization;
  double value_quadrature = 0.0;
  double value_closed_form = 0.0;
  double rel_discrepancy = 0.0;
};

// Evaluates both routes and their relative discrepancy
//   |quad - closed| / max(|quad|, alpha^7),
// where the alpha^7 floor keeps elements that vanish at leading order from
// reporting meaningless ratios.
inline MatrixElementResult compare_diagonal(const QuantumNumbers& qn,
                                            CorrectionKind kind,
                                            const PhysicsConfig& cfg) {
  MatrixElementResult r;
  r.qn = qn;
  r.kind = kind;
  r.value_quadrature = diagonal_element(qn, kind, cfg);
  r.value_closed_form = closed_form_element(qn, kind, cfg);
  r.rel_discrepancy = std::abs(r.value_quadrature - r.value_closed_form) /
                      std::max(std::abs(r.value_quadrature),
                               std::pow(cfg.alpha, 7));
  return r;
}

namespace me_detail {

// p(s r) expressed as a polynomial in r.
inline std::vector<double> poly_arg_scale(const std::vector<double>& p,
                                          double s) {
  std::vector<double> out(p.size());
  double f = 1.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = p[k] * f;
    f *= s;
  }
  return out;
}

}  // namespace me_detail

// <a| V |b> between bound states sharing (two_j, sigma), via the reduction of
// the mixed Gamma-moments to one-dimensional zeta integrals (J integrals for
// the vacuum correction).  n_a == n_b reproduces diagonal_element.
inline double off_diagonal_element(int n_a, int n_b, int two_j, int sigma,
                                   CorrectionKind kind,
                                   const PhysicsConfig& cfg) {
  const QuantumNumbers qa{n_a, two_j, 1, sigma};
  const QuantumNumbers qb{n_b, two_j, 1, sigma};
  const RadialState sta = radial_state(qa, cfg, RadialMode::exact);
  const RadialState stb = radial_state(qb, cfg, RadialMode::exact);
  const double alpha = cfg.alpha;
  const double g = sta.gamma;
  const double two_gamma = 2.0 * g;
  const double ssum = alpha * (1.0 / sta.cal_n + 1.0 / stb.cal_n);
  const double pref = std::pow(sta.rho_scale * stb.rho_scale, g + 0.5) *
                      sta.norm_a * stb.norm_a;
  const double pi = std::numbers::pi;
  const auto pa = me_detail::poly_arg_scale(sta.p_poly, sta.rho_scale);
  const auto wa = me_detail::poly_arg_scale(sta.w_poly, sta.rho_scale);
  const auto pb = me_detail::poly_arg_scale(stb.p_poly, stb.rho_scale);
  const auto wb = me_detail::poly_arg_scale(stb.w_poly, stb.rho_scale);
  using dirac_detail::poly_lin;
  using dirac_detail::poly_mul;

  if (kind == CorrectionKind::magnetic_form_factor) {
    const auto mix = poly_lin(poly_mul(pa, wb), stb.lambda,
                              poly_mul(wa, pb), sta.lambda);
    double total = 0.0;
    for (std::size_t k = 0; k < mix.size(); ++k) {
      if (mix[k] == 0.0) continue;
      const double nu = two_gamma + static_cast<double>(k) - 1.0;
      const double g_nu = gamma_fn(nu);
      const double g_nu1 = gamma_fn(nu + 1.0);
      auto f = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double z = std::cosh(u);
        const double s = std::sinh(u);
        const double c = ssum + 2.0 * z;
        return pot_detail::h_mag(z, s) * s *
               (g_nu / std::pow(c, nu) + 2.0 * z * g_nu1 / std::pow(c, nu + 1.0));
      };
      const double tail = integrate_segments(f, cosh_breakpoints(), cfg.quadrature);
      total += mix[k] * (g_nu / std::pow(ssum, nu) - tail);
    }
    return (alpha * alpha / (4.0 * pi)) * pref * total;
  }

  const auto mix = poly_lin(poly_mul(pa, pb), 1.0, poly_mul(wa, wb),
                            sta.lambda * stb.lambda);
  if (kind == CorrectionKind::vacuum_polarization) {
    const double beta = ssum * derived_scales(cfg).r0;
    double total = 0.0;
    for (std::size_t k = 0; k < mix.size(); ++k) {
      if (mix[k] == 0.0) continue;
      const double mu = two_gamma + static_cast<double>(k);
      total += mix[k] * std::pow(ssum, -mu) *
               vac_j_integral(mu, beta, cfg).path_direct;
    }
    return (alpha / 3.0) * pref * total;
  }

  const bool is_pp = kind == CorrectionKind::photon_polarization;
  const double lcut = cfg.cutoff.ln_2m_over_lambda(alpha);
  double total = 0.0;
  for (std::size_t k = 0; k < mix.size(); ++k) {
    if (mix[k] == 0.0) continue;
    const double mu = two_gamma + static_cast<double>(k);
    auto f = [&](double u) {
      if (u <= 0.0) return 0.0;
      const double z = std::cosh(u);
      const double s = std::sinh(u);
      const double kern = is_pp ? pot_detail::k_pp(z, s)
                                : pot_detail::f_elec(z, s, lcut);
      return kern * s / std::pow(ssum + 2.0 * z, mu);
    };
    total += mix[k] * gamma_fn(mu) *
             integrate_segments(f, cosh_breakpoints(), cfg.quadrature);
  }
  const double front = is_pp ? -(2.0 * alpha * alpha / (3.0 * pi))
                             : (alpha * alpha / (2.0 * pi));
  return front * pref * total;
}

// Log-slope of the j = n - 1/2 photon-polarization element between
// alpha = 1e-2 and 1e-3; the expansion predicts 3 + 2 gamma_j.
inline double pp_scaling_slope(int n, const PhysicsConfig& base) {
  PhysicsConfig cfg = base;
  const QuantumNumbers qn{n, 2 * n - 1, 1, +1};
  double v[2];
  const double alphas[2] = {1e-2, 1e-3};
  for (int i = 0; i < 2; ++i) {
    cfg.alpha = alphas[i];
    v[i] = diagonal_element(qn, CorrectionKind::photon_polarization, cfg);
  }
  return (std::log(std::abs(v[0])) - std::log(std::abs(v[1]))) / std::log(10.0);
}

}  // namespace qedlamb

#endif  // QEDLAMB_MATRIX_ELEMENTS_HPP
