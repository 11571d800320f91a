#pragma once

#include <vector>

#include "colorsim/code.hpp"
#include "colorsim/noise.hpp"
#include "colorsim/syndrome.hpp"

namespace colorsim {

// Pure-dephasing decoder for stripe-deformed color codes. At infinite bias
// the code splits into two families of classical chains, one per qubit
// type: each face checks the parity of its (at most three) consecutive
// same-type qubits along a stripe domain.
//
// Every chain is decoded by an exact minimum-weight sweep: open chains
// with a sliding two-value state, cyclic chains by additionally fixing
// the two seam values. This subsumes matching along the two-color
// symmetry lines followed by the weight-reduced third-color pass, and is
// never weaker than doing those two steps in sequence.
class InfiniteBiasDecoder : public Decoder {
 public:
  InfiniteBiasDecoder(const StabilizerCode& code, const NoiseChannel& channel);

  DecodeResult decode(const Syndrome& s) override;
  std::string name() const override { return "infinite-bias"; }

 private:
  struct Window {
    int gen = -1;          // generator index carrying the syndrome bit
    int first = 0;         // chain position of the leftmost qubit
    int size = 0;          // 1..3 consecutive qubits
    FaceColor color = FaceColor::kNone;
  };
  struct Chain {
    std::vector<int> qubits;  // chain position -> qubit id
    std::vector<Window> windows;
    bool cyclic = false;
  };

  void build_pass(bool masked_type);
  void decode_chain(const Chain& chain, const Syndrome& s, BitVec& support) const;

  StabilizerCode code_;
  NoiseChannel channel_;
  std::vector<double> qubit_weight_;
  std::vector<Chain> chains_[2];  // [0] masked-type pass, [1] unmasked
  std::vector<int> always_zero_gens_;
};

}  // namespace colorsim
