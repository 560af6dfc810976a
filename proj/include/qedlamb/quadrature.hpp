#ifndef QEDLAMB_QUADRATURE_HPP
#define QEDLAMB_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qedlamb {

// Endpoint treatment for integrands that are singular (but integrable) at an
// endpoint, or that extend to an infinite upper limit:
//   none        no substitution; an infinite upper limit uses an algebraic map
//   sqrt_lower  x = a + u^2 at the lower endpoint (inverse-sqrt singularities)
//   exp_upper   logarithmic map at an infinite upper limit (exponential tails)
enum class SingularMap { none, sqrt_lower, exp_upper };

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_subdivisions = 240;
  SingularMap singular_endpoint_map = SingularMap::none;
};

// Thrown when the adaptive subdivision budget is exhausted before the
// requested tolerance is met.  Carries the best estimate achieved so callers
// can report partial results.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what),
        estimate_(estimate),
        error_estimate_(error_estimate) {}

  double estimate() const { return estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

namespace quad_detail {

// 7-15 Gauss-Kronrod pair on [-1, 1].  Odd-indexed Kronrod nodes plus the
// centre form the embedded 7-point Gauss rule.
inline constexpr double kNodes[8] = {
    0.99145537112081263920685469752633, 0.94910791234275852452618968404785,
    0.86486442335976907278971278864093, 0.74153118559939443986386477328079,
    0.58608723546769113029414483825873, 0.40584515137739716690660641207696,
    0.20778495500789846760068940377324, 0.0};
inline constexpr double kKronrodW[8] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318921,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923465, 0.20948214108472782801299917489171};
inline constexpr double kGaussW[4] = {
    0.12948496616886969327061143267908, 0.27970539148927664679646891813480,
    0.38183005050511894495036977548898, 0.41795918367346938775510204081633};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

template <typename F>
Panel gk15(const F& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  const double fc = f(c);
  double resk = kKronrodW[7] * fc;
  double resg = kGaussW[3] * fc;
  double resabs = kKronrodW[7] * std::abs(fc);
  double fv1[7];
  double fv2[7];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kNodes[i];
    fv1[i] = f(c - dx);
    fv2[i] = f(c + dx);
    resk += kKronrodW[i] * (fv1[i] + fv2[i]);
    resabs += kKronrodW[i] * (std::abs(fv1[i]) + std::abs(fv2[i]));
    if (i % 2 == 1) resg += kGaussW[(i - 1) / 2] * (fv1[i] + fv2[i]);
  }
  const double reskh = 0.5 * resk;
  double resasc = kKronrodW[7] * std::abs(fc - reskh);
  for (int i = 0; i < 7; ++i) {
    resasc += kKronrodW[i] *
              (std::abs(fv1[i] - reskh) + std::abs(fv2[i] - reskh));
  }
  resasc *= std::abs(h);
  resabs *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {a, b, resk * h, err};
}

template <typename F>
double adaptive(const F& f, double a, double b, const QuadratureSpec& spec) {
  std::vector<Panel> panels;
  panels.push_back(gk15(f, a, b));
  for (int iter = 0;; ++iter) {
    double total = 0.0;
    double total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      total_err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
      return total;
    }
    if (iter >= spec.max_subdivisions) {
      throw QuadratureError("adaptive quadrature did not converge", total,
                            total_err);
    }
    const Panel bad = panels[worst];
    const double mid = 0.5 * (bad.a + bad.b);
    if (mid <= bad.a || mid >= bad.b) {
      throw QuadratureError("adaptive quadrature hit interval resolution",
                            total, total_err);
    }
    panels[worst] = gk15(f, bad.a, mid);
    panels.push_back(gk15(f, mid, bad.b));
  }
}

// Semi-infinite upper limit, algebraic map x = a + t/(1-t); Kronrod nodes
// are interior, so t = 1 is never sampled.
template <typename F>
double upper_algebraic(const F& f, double a, const QuadratureSpec& spec) {
  auto g = [&](double t) {
    const double om = 1.0 - t;
    return f(a + t / om) / (om * om);
  };
  return adaptive(g, 0.0, 1.0, spec);
}

// Semi-infinite upper limit, logarithmic map x = a + ln(1/(1-t)); suited to
// integrands with an e^(-x) tail.
template <typename F>
double upper_exp(const F& f, double a, const QuadratureSpec& spec) {
  auto g = [&](double t) {
    const double om = 1.0 - t;
    return f(a - std::log(om)) / om;
  };
  return adaptive(g, 0.0, 1.0, spec);
}

}  // namespace quad_detail

// Integrates f over [a, b] to the requested tolerances.  b may be infinite.
// The spec's singular_endpoint_map applies to this interval's endpoints.
template <typename F>
double integrate(const F& f, double a, double b,
                 const QuadratureSpec& spec = {}) {
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw std::invalid_argument("integrate: requires a < b");
  }
  if (std::isinf(b)) {
    if (spec.singular_endpoint_map == SingularMap::exp_upper) {
      return quad_detail::upper_exp(f, a, spec);
    }
    if (spec.singular_endpoint_map == SingularMap::sqrt_lower) {
      auto g = [&](double u) { return 2.0 * u * f(a + u * u); };
      return quad_detail::upper_algebraic(
          [&](double u) { return g(u); }, 0.0, spec);
    }
    return quad_detail::upper_algebraic(f, a, spec);
  }
  if (spec.singular_endpoint_map == SingularMap::sqrt_lower) {
    auto g = [&](double u) { return 2.0 * u * f(a + u * u); };
    return quad_detail::adaptive(g, 0.0, std::sqrt(b - a), spec);
  }
  return quad_detail::adaptive(f, a, b, spec);
}

// Piecewise integration over an ordered breakpoint list (the last entry may
// be infinite).  sqrt_lower applies to the first panel only and exp_upper to
// the final (infinite) panel only.
template <typename F>
double integrate_segments(const F& f, const std::vector<double>& points,
                          const QuadratureSpec& spec = {}) {
  if (points.size() < 2) {
    throw std::invalid_argument("integrate_segments: needs at least 2 points");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    QuadratureSpec local = spec;
    local.singular_endpoint_map = SingularMap::none;
    if (i == 0 && spec.singular_endpoint_map == SingularMap::sqrt_lower) {
      local.singular_endpoint_map = SingularMap::sqrt_lower;
    }
    if (i + 2 == points.size() && std::isinf(points[i + 1]) &&
        spec.singular_endpoint_map == SingularMap::exp_upper) {
      local.singular_endpoint_map = SingularMap::exp_upper;
    }
    total += integrate(f, points[i], points[i + 1], local);
  }
  return total;
}

}  // namespace qedlamb

#endif  // QEDLAMB_QUADRATURE_HPP
