#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorsim/code.hpp"
#include "colorsim/pauli.hpp"

namespace colorsim {

// One bit per generator; 1 marks a flipped check.
struct Syndrome {
  BitVec bits;

  std::size_t weight() const { return bits.popcount(); }
  bool operator==(const Syndrome& o) const { return bits == o.bits; }
};

Syndrome syndrome_of(const StabilizerCode& code, const PauliOperator& error);

struct DecodeResult {
  PauliOperator correction;
  int logical_class = 0;                    // class of the correction relative to
                                            // the decoder's reference pure error
  std::vector<double> class_probabilities;  // ML decoder only, 4^k entries
};

// Class label of a syndrome-free operator: two bits per logical pair,
// bit0 = carries x_bar(i), bit1 = carries z_bar(i); 0 means trivial.
int logical_class_of(const StabilizerCode& code, const PauliOperator& op);

class Decoder {
 public:
  virtual ~Decoder() = default;
  virtual DecodeResult decode(const Syndrome& s) = 0;
  virtual std::string name() const = 0;
};

}  // namespace colorsim
