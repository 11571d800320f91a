#include "colorsim/pauli.hpp"

#include <stdexcept>

namespace colorsim {

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) throw std::invalid_argument("multiply: operand sizes differ");
  PauliOperator out = a;
  out.x ^= b.x;
  out.z ^= b.z;
  return out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) throw std::invalid_argument("commutes: operand sizes differ");
  return !(a.x.dot(b.z) ^ a.z.dot(b.x));
}

PauliOperator pauli_from_string(const std::string& s) {
  PauliOperator p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I': break;
      case 'X': p.x.set(i, true); break;
      case 'Z': p.z.set(i, true); break;
      case 'Y': p.x.set(i, true); p.z.set(i, true); break;
      default: throw std::invalid_argument("pauli_from_string: bad character");
    }
  }
  return p;
}

std::string PauliOperator::to_string() const {
  static const char kNames[4] = {'I', 'X', 'Z', 'Y'};
  std::string s(n, 'I');
  for (std::size_t i = 0; i < n; ++i) s[i] = kNames[pauli_at(i)];
  return s;
}

}  // namespace colorsim
