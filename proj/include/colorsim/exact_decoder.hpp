#pragma once

#include <array>
#include <vector>

#include "colorsim/code.hpp"
#include "colorsim/noise.hpp"
#include "colorsim/syndrome.hpp"

namespace colorsim {

// Exact maximum-likelihood decoder. For each logical class it sums the
// probability of every error consistent with the syndrome by walking the
// stabilizer group in Gray-code order, then picks the heaviest class.
// Qubits whose channel forbids some Pauli component restrict the walk to
// the compatible subgroup, so pure-dephasing channels stay exact and fast.
class ExactMLDecoder : public Decoder {
 public:
  ExactMLDecoder(const StabilizerCode& code, const NoiseChannel& channel);

  DecodeResult decode(const Syndrome& s) override;
  std::string name() const override { return "exact-ml"; }

  // Failure probability summed in closed form over every syndrome.
  double logical_rate();

  // Total probability bookkeeping: sum of all class probabilities over all
  // syndromes (1 for a well-formed channel).
  double total_probability();

  const StabilizerCode& code() const { return code_; }

 private:
  struct ClassSums {
    std::vector<double> probs;  // absolute probability per class
  };
  ClassSums class_sums(const PauliOperator& pure_error) const;
  PauliOperator pure_error_for(const Syndrome& s) const;
  PauliOperator logical_rep(int label) const;

  StabilizerCode code_;
  NoiseChannel channel_;
  std::vector<std::array<double, 4>> log_prob_;       // [qubit][pauli code]
  std::vector<std::array<double, 16>> ratio_factor_;  // [qubit][old<<2 | toggle]
  std::vector<PauliOperator> ind_gens_;
  BinaryMatrix solve_matrix_;  // swapped rows of independent generators
  std::vector<std::size_t> ind_index_;

  // Zero-probability component constraints: (qubit, bit) with bit 0 for x
  // and 1 for z. The subgroup walk stays inside their kernel.
  std::vector<std::pair<int, int>> constraints_;
  BinaryMatrix constraint_matrix_;  // rows: constraints, cols: ind gens
  struct WalkStep {
    PauliOperator pauli;
    std::vector<std::pair<int, unsigned>> support;  // (qubit, pauli code)
  };
  std::vector<WalkStep> walk_basis_;  // kernel of the constraint matrix
  int num_classes_ = 1;
};

// Convenience wrappers.
double exact_logical_rate(const StabilizerCode& code, const NoiseChannel& channel);

}  // namespace colorsim
