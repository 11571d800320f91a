#include "colorsim/families.hpp"

#include <stdexcept>

namespace colorsim {

StabilizerCode build_family_code(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "css-hex") return build_css_color_code(build_hex_triangular(spec.size));
  if (f == "x3z3") {
    Lattice lat = build_hex_triangular(spec.size);
    return apply_deformation(build_css_color_code(lat),
                             make_deformation(lat, {1, 1}, {1, 6}, spec.stripe_phase));
  }
  if (f == "dw") {
    Lattice lat = build_hex_triangular(spec.size);
    return apply_deformation(build_css_color_code(lat),
                             make_deformation(lat, spec.kappa, spec.phi, spec.stripe_phase));
  }
  if (f == "css-hex-periodic") return build_css_color_code(build_hex_periodic(spec.size));
  if (f == "x3z3-periodic") {
    Lattice lat = build_hex_periodic(spec.size);
    return apply_deformation(build_css_color_code(lat),
                             make_deformation(lat, {1, 1}, {1, 6}, spec.stripe_phase));
  }
  if (f == "x3z3-coprime") {
    Lattice lat = build_hex_coprime(spec.size);
    return apply_deformation(build_css_color_code(lat),
                             make_deformation(lat, {1, 1}, {1, 6}, spec.stripe_phase));
  }
  if (f == "css-488") return build_css_color_code(build_488_triangular(spec.size));
  if (f == "css-surface") return build_css_surface_code(build_square_surface(spec.size));
  if (f == "xzzx") {
    Lattice lat = build_square_surface(spec.size);
    return apply_deformation(build_css_surface_code(lat),
                             make_deformation(lat, {1, 1}, {1, 4}, spec.stripe_phase));
  }
  throw std::invalid_argument("unknown code family: " + f);
}

std::string family_label(const FamilySpec& spec) {
  std::string tag = "d";
  if (spec.family.find("periodic") != std::string::npos) tag = "L";
  if (spec.family.find("coprime") != std::string::npos) tag = "k";
  std::string label = spec.family + "-" + tag + std::to_string(spec.size);
  if (spec.family == "dw")
    label += "-kappa" + spec.kappa.to_string() + "-phi" + spec.phi.to_string();
  return label;
}

}  // namespace colorsim
