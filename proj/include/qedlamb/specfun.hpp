#ifndef QEDLAMB_SPECFUN_HPP
#define QEDLAMB_SPECFUN_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qedlamb {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// Gamma function restricted to the positive real axis, which is the only
// region the radial moments need.
inline double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_fn: argument must be positive, got " +
                            std::to_string(x));
  }
  return std::tgamma(x);
}

// Ascending-power coefficients of the generalized Laguerre polynomial
// L_n^{(a)}(x) = sum_m c_m x^m.  By convention n = -1 yields the zero
// polynomial (it enters the radial functions as a vanishing second term).
inline std::vector<double> laguerre_coefficients(int n, double a) {
  if (n < 0) return {0.0};
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  double c0 = 1.0;
  for (int i = 1; i <= n; ++i) c0 *= (a + i) / i;
  c[0] = c0;
  for (int m = 0; m < n; ++m) {
    c[m + 1] = -c[m] * (n - m) / ((m + 1.0) * (a + m + 1.0));
  }
  return c;
}

inline double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

namespace sf_detail {

// Maclaurin series for Si and Ci, reliable up to x of about 6 in double
// precision.
inline void sici_series(double x, double& si_out, double& ci_out) {
  const double x2 = x * x;
  double term = x;
  double si = x;
  for (int k = 1; k < 40; ++k) {
    // term holds x^(2k+1) / (2k+1)! after the update below.
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double add = term / (2.0 * k + 1.0);
    si += add;
    if (std::abs(add) < 1e-18 * std::abs(si)) break;
  }
  double cterm = 1.0;
  double csum = 0.0;
  for (int k = 1; k < 40; ++k) {
    cterm *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double add = cterm / (2.0 * k);
    csum += add;
    if (std::abs(add) < 1e-18) break;
  }
  si_out = si;
  ci_out = kEulerGamma + std::log(x) + csum;
}

// Modified Lentz continued fraction for E1(z), valid away from the negative
// real axis; used here on the positive imaginary axis.
inline std::complex<double> e1_continued_fraction(std::complex<double> z) {
  const double tiny = 1e-290;
  std::complex<double> b = z + 1.0;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      return h * std::exp(-z);
    }
  }
  throw std::runtime_error("e1_continued_fraction: no convergence");
}

}  // namespace sf_detail

// Shifted sine integral si(x) = Si(x) - pi/2 = -integral_x^inf sin(t)/t dt.
inline double sin_integral(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("sin_integral: requires x >= 0");
  }
  if (x == 0.0) return -std::numbers::pi / 2.0;
  if (x <= 4.0) {
    double si, ci;
    sf_detail::sici_series(x, si, ci);
    return si - std::numbers::pi / 2.0;
  }
  const std::complex<double> u =
      std::exp(std::complex<double>(0.0, x)) *
      sf_detail::e1_continued_fraction(std::complex<double>(0.0, x));
  const double f = -u.imag();
  const double g = u.real();
  return -(f * std::cos(x) + g * std::sin(x));
}

// Cosine integral Ci(x) for x > 0.
inline double cos_integral(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("cos_integral: requires x > 0");
  }
  if (x <= 4.0) {
    double si, ci;
    sf_detail::sici_series(x, si, ci);
    return ci;
  }
  const std::complex<double> u =
      std::exp(std::complex<double>(0.0, x)) *
      sf_detail::e1_continued_fraction(std::complex<double>(0.0, x));
  const double f = -u.imag();
  const double g = u.real();
  return f * std::sin(x) - g * std::cos(x);
}

// Auxiliary functions of the sine and cosine integrals,
//   f(x) = Ci(x) sin(x) + (pi/2 - Si(x)) cos(x)
//   g(x) = -Ci(x) cos(x) + (pi/2 - Si(x)) sin(x),
// both positive and monotonically decreasing for x > 0.
inline double aux_f(double x) {
  if (!(x > 0.0)) throw std::domain_error("aux_f: requires x > 0");
  if (x > 4.0) {
    const std::complex<double> u =
        std::exp(std::complex<double>(0.0, x)) *
        sf_detail::e1_continued_fraction(std::complex<double>(0.0, x));
    return -u.imag();
  }
  double si, ci;
  sf_detail::sici_series(x, si, ci);
  return ci * std::sin(x) + (std::numbers::pi / 2.0 - si) * std::cos(x);
}

inline double aux_g(double x) {
  if (!(x > 0.0)) throw std::domain_error("aux_g: requires x > 0");
  if (x > 4.0) {
    const std::complex<double> u =
        std::exp(std::complex<double>(0.0, x)) *
        sf_detail::e1_continued_fraction(std::complex<double>(0.0, x));
    return u.real();
  }
  double si, ci;
  sf_detail::sici_series(x, si, ci);
  return -ci * std::cos(x) + (std::numbers::pi / 2.0 - si) * std::sin(x);
}

// Complex continuations of the auxiliary functions near the origin, via the
// Maclaurin series of Si and Ci with the principal logarithm.  Only small
// moduli are needed (arguments proportional to the vacuum length scale), so
// the series is restricted to |z| <= 1.
inline std::complex<double> aux_f(std::complex<double> z) {
  if (!(std::abs(z) > 0.0) || std::abs(z) > 1.0) {
    throw std::domain_error("aux_f: complex series limited to 0 < |z| <= 1");
  }
  const std::complex<double> z2 = z * z;
  std::complex<double> term = z;
  std::complex<double> si = z;
  for (int k = 1; k < 30; ++k) {
    term *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
    si += term / (2.0 * k + 1.0);
    if (std::abs(term) < 1e-20 * std::abs(si)) break;
  }
  std::complex<double> cterm = 1.0;
  std::complex<double> csum = 0.0;
  for (int k = 1; k < 30; ++k) {
    cterm *= -z2 / ((2.0 * k - 1.0) * (2.0 * k));
    csum += cterm / (2.0 * k);
    if (std::abs(cterm) < 1e-20) break;
  }
  const std::complex<double> ci = kEulerGamma + std::log(z) + csum;
  return ci * std::sin(z) + (std::numbers::pi / 2.0 - si) * std::cos(z);
}

inline std::complex<double> aux_g(std::complex<double> z) {
  if (!(std::abs(z) > 0.0) || std::abs(z) > 1.0) {
    throw std::domain_error("aux_g: complex series limited to 0 < |z| <= 1");
  }
  const std::complex<double> z2 = z * z;
  std::complex<double> term = z;
  std::complex<double> si = z;
  for (int k = 1; k < 30; ++k) {
    term *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
    si += term / (2.0 * k + 1.0);
    if (std::abs(term) < 1e-20 * std::abs(si)) break;
  }
  std::complex<double> cterm = 1.0;
  std::complex<double> csum = 0.0;
  for (int k = 1; k < 30; ++k) {
    cterm *= -z2 / ((2.0 * k - 1.0) * (2.0 * k));
    csum += cterm / (2.0 * k);
    if (std::abs(cterm) < 1e-20) break;
  }
  const std::complex<double> ci = kEulerGamma + std::log(z) + csum;
  return -ci * std::cos(z) + (std::numbers::pi / 2.0 - si) * std::sin(z);
}

// Theta-normalized associated Legendre function: Theta_l^m(theta) such that
// the integral of Theta^2 sin(theta) over [0, pi] is 1.  No Condon-Shortley
// phase.  Used to assemble spherical spinor components.
inline double normalized_legendre(int l, int m, double theta) {
  const int am = std::abs(m);
  if (l < 0 || am > l) {
    throw std::domain_error("normalized_legendre: requires 0 <= |m| <= l");
  }
  const double x = std::cos(theta);
  const double s = std::sin(theta);
  // P_am^am = (2 am - 1)!! (sin theta)^am
  double pmm = 1.0;
  for (int i = 1; i <= am; ++i) pmm *= (2.0 * i - 1.0) * s;
  if (l == am) {
    double norm = (2.0 * l + 1.0) / 2.0;
    for (int i = l - am + 1; i <= l + am; ++i) norm /= i;
    return std::sqrt(norm) * pmm;
  }
  double pm1 = x * (2.0 * am + 1.0) * pmm;
  if (l == am + 1) {
    double norm = (2.0 * l + 1.0) / 2.0;
    for (int i = l - am + 1; i <= l + am; ++i) norm /= i;
    return std::sqrt(norm) * pm1;
  }
  double p = 0.0;
  for (int ll = am + 2; ll <= l; ++ll) {
    p = (x * (2.0 * ll - 1.0) * pm1 - (ll + am - 1.0) * pmm) / (ll - am);
    pmm = pm1;
    pm1 = p;
  }
  double norm = (2.0 * l + 1.0) / 2.0;
  for (int i = l - am + 1; i <= l + am; ++i) norm /= i;
  return std::sqrt(norm) * p;
}

}  // namespace qedlamb

#endif  // QEDLAMB_SPECFUN_HPP
