#include "colorsim/syndrome.hpp"

#include <stdexcept>

namespace colorsim {

Syndrome syndrome_of(const StabilizerCode& code, const PauliOperator& error) {
  if (error.n != static_cast<std::size_t>(code.n))
    throw std::invalid_argument("syndrome_of: size mismatch");
  Syndrome s;
  s.bits = BitVec(code.generators.size());
  for (std::size_t g = 0; g < code.generators.size(); ++g) {
    const auto& gen = code.generators[g];
    s.bits.set(g, gen.x.dot(error.z) ^ gen.z.dot(error.x));
  }
  return s;
}

int logical_class_of(const StabilizerCode& code, const PauliOperator& op) {
  int label = 0;
  for (std::size_t i = 0; i < code.logicals.size(); ++i) {
    bool has_x = !commutes(op, code.logicals[i].z_bar);
    bool has_z = !commutes(op, code.logicals[i].x_bar);
    label |= (static_cast<int>(has_x) | (static_cast<int>(has_z) << 1)) << (2 * i);
  }
  return label;
}

}  // namespace colorsim
