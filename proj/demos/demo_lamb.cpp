#include <cstdio>

#include "qedlamb/lamb.hpp"

// Walks the 2S1/2 - 2P1/2 splitting: per-kind level shifts, the exact and
// closed-form assemblies under each infrared cutoff convention, and the
// cutoff calibrated from the measured splitting.

int main() {
  qedlamb::PhysicsConfig cfg;
  const qedlamb::QuantumNumbers two_s{2, 1, 1, +1};
  const qedlamb::QuantumNumbers two_p12{2, 1, 1, -1};

  std::printf("level shifts [mc^2], exact quadrature:\n");
  std::printf("%-8s %13s %13s %13s %13s %13s\n", "state", "photon-pol", "elec-ff",
              "mag-ff", "vacuum", "total");
  for (const auto& qn : {two_s, two_p12}) {
    const auto ls = qedlamb::level_shift(qn, cfg);
    const auto& q = ls.breakdown.quadrature;
    std::printf("%-8s %13.5e %13.5e %13.5e %13.5e %13.5e\n", qn.label().c_str(),
                q[0], q[1], q[2], q[3], ls.breakdown.total_quadrature);
  }

  const double unit = qedlamb::lamb_unit_mhz(cfg);
  std::printf("\nLamb unit mc^2 alpha^5 / 6 pi = %.6f MHz\n", unit);

  const auto exact = qedlamb::lamb_split(two_s, two_p12, cfg);
  const auto closed =
      qedlamb::lamb_split(two_s, two_p12, cfg, qedlamb::EvalMode::closed_form);
  std::printf("exact quadrature:  C_L = %.6f  delta = %.4f MHz\n", exact.c_l,
              exact.delta_mhz);
  std::printf("closed form:       C_L = %.6f  delta = %.4f MHz\n", closed.c_l,
              closed.delta_mhz);
  std::printf("bracketed C_L:     C_L = %.6f  delta = %.4f MHz\n",
              qedlamb::lamb_cl_bracket(cfg),
              unit * qedlamb::lamb_cl_bracket(cfg));

  std::printf("\ncutoff variants (closed form):\n");
  struct Variant {
    const char* name;
    qedlamb::IRCutoff cutoff;
  };
  const Variant variants[] = {
      {"two-ln", qedlamb::IRCutoff::two_ln()},
      {"schwinger", qedlamb::IRCutoff::schwinger()},
      {"explicit 9.5", qedlamb::IRCutoff::explicit_cut(9.5)},
  };
  for (const auto& v : variants) {
    qedlamb::PhysicsConfig vcfg = cfg;
    vcfg.cutoff = v.cutoff;
    const auto sp =
        qedlamb::lamb_split(two_s, two_p12, vcfg, qedlamb::EvalMode::closed_form);
    std::printf("  %-14s ln 2m/lambda = %9.6f  C_L = %9.6f  delta = %9.4f MHz\n",
                v.name, v.cutoff.ln_2m_over_lambda(cfg.alpha), sp.c_l,
                sp.delta_mhz);
  }

  const auto cal = qedlamb::calibrate_cutoff(qedlamb::kTargetExperimentMhz, cfg);
  std::printf("\ncalibrated from %.3f MHz: ln 2m/lambda = %.6f, offset vs "
              "ln(1/alpha^2) = %.6f\n",
              qedlamb::kTargetExperimentMhz, cal.ln_2m_over_lambda,
              cal.offset_vs_ln_inv_alpha_sq);
  return 0;
}
