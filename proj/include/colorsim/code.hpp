#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorsim/gf2.hpp"
#include "colorsim/lattice.hpp"
#include "colorsim/pauli.hpp"

namespace colorsim {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  static Rational parse(const std::string& s);
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Hadamard deformation of a code. The per-qubit mask is the authoritative
// data; kappa (domain walls per unit distance) and phi (wall orientation,
// a rational multiple of pi) label the stripe family that generated it.
struct DeformationSpec {
  Rational kappa{0, 1};
  Rational phi_pi{0, 1};  // orientation as a fraction of pi
  BitVec pattern;

  bool masked(std::size_t q) const { return pattern.get(q); }
  bool is_trivial() const { return !pattern.any(); }
};

struct LogicalPair {
  PauliOperator x_bar;
  PauliOperator z_bar;
};

struct StabilizerCode {
  Lattice lattice;
  std::vector<PauliOperator> generators;
  std::vector<LogicalPair> logicals;
  DeformationSpec deformation;
  int n = 0;
  int k = 0;
  int d_target = 0;

  // Color codes carry two generators per face, X-type first.
  int face_of_generator(int g) const;
  bool generator_is_x_type(int g) const;

  // Stacked [x | z] rows of all generators.
  BinaryMatrix symplectic_matrix() const;
  // True iff p is a product of generators.
  bool in_stabilizer_group(const PauliOperator& p) const;
  // True iff p commutes with every generator.
  bool syndrome_free(const PauliOperator& p) const;
};

// Two generators per face per the face-product rule; k = 1 on triangular
// patches and 4 on the periodic ones.
StabilizerCode build_css_color_code(const Lattice& lat);

// One generator per face, type given by the face role.
StabilizerCode build_css_surface_code(const Lattice& lat);

// Stripe deformation masks. Supported (kappa, phi) pairs:
//   hexagonal:      (0, *), (1/2, 0), (2/3, 0), (1, pi/6), (3/2, 0), (2, pi/2)
//   square surface: (0, *), (1, pi/4)
// stripe_phase shifts the stripe pattern; the default places the walls so
// that the small-instance logical counts are minimized.
DeformationSpec make_deformation(const Lattice& lat, Rational kappa, Rational phi_pi,
                                 int stripe_phase = 0);

// Measured wall density of an arbitrary mask: stripe transitions between
// consecutive occupied stripe columns, per unit of code distance.
Rational measured_kappa(const Lattice& lat, const BitVec& pattern);

// Conjugate every generator and logical by Hadamards on the masked qubits.
StabilizerCode apply_deformation(const StabilizerCode& code, const DeformationSpec& spec);

// Canonical symplectic pairs spanning normalizer mod stabilizer.
std::vector<LogicalPair> extract_logicals(const std::vector<PauliOperator>& generators);

// Number of nontrivial logical operators using only the given single-qubit
// Pauli type (code 1 = X, 2 = Z) with weight <= weight_cap.
// Throws BudgetExceeded when the search is too large.
long long count_short_pure_logicals(const StabilizerCode& code, unsigned pauli_code,
                                    int weight_cap);

struct DistanceReport {
  bool pass = false;
  std::optional<PauliOperator> witness;  // a logical of weight < d_target
};

// Exhaustively confirms no logical operator of weight < d_target exists.
DistanceReport verify_distance(const StabilizerCode& code, int d_target);

}  // namespace colorsim
