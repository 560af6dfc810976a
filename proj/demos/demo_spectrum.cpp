#include <cstdio>

#include "qedlamb/dirac.hpp"

// Prints the Dirac-Coulomb levels for n <= 3 and the fine-structure
// splittings within each shell.

int main() {
  qedlamb::PhysicsConfig cfg;
  std::printf("Dirac-Coulomb spectrum at alpha = %.12g\n\n", cfg.alpha);
  std::printf("%-8s %-22s %-16s %s\n", "state", "eps", "binding [eV]",
              "(eps - 1) mc^2");
  for (int n = 1; n <= 3; ++n) {
    for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
      for (int sigma : {+1, -1}) {
        qedlamb::QuantumNumbers qn{n, two_j, 1, sigma};
        if (qn.n_r() == 0 && sigma == -1) continue;
        const auto lv = qedlamb::level(qn, cfg);
        std::printf("%-8s %.16f %-16.8f %.6e\n", qn.label().c_str(), lv.eps,
                    (lv.eps - 1.0) * cfg.rest_energy, lv.eps - 1.0);
      }
    }
  }

  std::printf("\nfine-structure splittings [eV]:\n");
  for (int n = 2; n <= 3; ++n) {
    for (int two_j = 3; two_j <= 2 * n - 1; two_j += 2) {
      const auto hi = qedlamb::level(n, two_j, cfg);
      const auto lo = qedlamb::level(n, two_j - 2, cfg);
      std::printf("  n=%d  j=%d/2 - j=%d/2: %.8e\n", n, two_j, two_j - 2,
                  hi.energy - lo.energy);
    }
  }

  const auto s_level = qedlamb::level(qedlamb::QuantumNumbers{2, 1, 1, +1}, cfg);
  const auto p_level = qedlamb::level(qedlamb::QuantumNumbers{2, 1, 1, -1}, cfg);
  std::printf("\n2S1/2 - 2P1/2 degeneracy: %.3g eV (exact zero)\n",
              s_level.energy - p_level.energy);
  return 0;
}
