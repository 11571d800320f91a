#pragma once

#include <string>

#include "colorsim/code.hpp"

namespace colorsim {

// Named code families used by the command line and the acceptance suite.
//   css-hex d            triangular 6.6.6, undeformed
//   x3z3 d               triangular 6.6.6 with the dense stripe mask
//   dw d                 triangular 6.6.6 with an explicit (kappa, phi)
//   css-hex-periodic L   L x L torus, undeformed
//   x3z3-periodic L      L x L torus, dense mask
//   x3z3-coprime k       (12k-1) x 6k sheared torus, dense mask
//   css-488 d            triangular 4.8.8
//   css-surface d        rotated surface code
//   xzzx d               rotated surface code, diagonal mask
struct FamilySpec {
  std::string family = "x3z3";
  int size = 3;                 // d, L or k depending on the family
  Rational kappa{0, 1};         // used by "dw" only
  Rational phi{0, 1};
  int stripe_phase = 0;
};

StabilizerCode build_family_code(const FamilySpec& spec);

// Label like "x3z3-d9" or "x3z3-periodic-L12" used in persisted results.
std::string family_label(const FamilySpec& spec);

}  // namespace colorsim
