#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace colorsim {

enum class LatticeKind { kHex666, kSquareSurface, kLattice488 };
enum class BoundaryKind { kOpenTriangular, kPeriodic, kCoprimeTwisted };
enum class FaceColor : std::uint8_t { kRed = 0, kGreen = 1, kBlue = 2, kNone = 3 };

// How a face turns into stabilizer generators. Color-code faces carry both
// an X-type and a Z-type generator; surface-code plaquettes carry one.
enum class FaceRole : std::uint8_t { kBothTypes, kXType, kZType };

const char* to_string(FaceColor c);

struct Site {
  int a = 0;  // row (hex lattices) or x (square lattices)
  int b = 0;  // column or y
  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

struct Face {
  FaceColor color = FaceColor::kNone;
  FaceRole role = FaceRole::kBothTypes;
  Site center;
  std::vector<int> qubits;  // indices into Lattice::qubits
};

// Identification data for periodic lattices: two basis vectors of the
// translation group, in site coordinates (delta_a, delta_b).
struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::kOpenTriangular;
  std::array<std::array<int, 2>, 2> identification{{{0, 0}, {0, 0}}};
  int twist = 0;
  // Boundary colors of the open triangular code: bottom, left, right.
  std::array<FaceColor, 3> side_colors{FaceColor::kNone, FaceColor::kNone,
                                       FaceColor::kNone};
};

struct Lattice {
  LatticeKind kind = LatticeKind::kHex666;
  BoundarySpec boundary;
  int distance = 0;               // d for open lattices, 0 otherwise
  std::array<int, 2> dims{0, 0};  // hexagon grid dimensions for periodic lattices

  std::vector<Site> qubits;
  std::vector<Face> faces;

  // qubit index -> indices of incident faces (filled by builders)
  std::vector<std::vector<int>> qubit_faces;

  std::size_t num_qubits() const { return qubits.size(); }
  std::size_t num_faces() const { return faces.size(); }

  int qubit_index(Site s) const;  // -1 when absent
  bool is_color_code() const { return kind != LatticeKind::kSquareSurface; }

  // Stripe coordinate used by the hexagonal deformation masks.
  // Well defined modulo the identifications up to shifts that are
  // multiples of 6, so domain parity is stable.
  int stripe_coordinate(int qubit) const { return 2 * qubits[qubit].b - qubits[qubit].a; }

  // Canonical representative of a site under the periodic identifications.
  Site canonical(Site s) const;

  std::map<Site, int> site_index;  // populated by builders
};

// Distance-d 6.6.6 color code with triangular boundaries. d odd, d >= 3.
Lattice build_hex_triangular(int d);

// L x L hexagons with fully periodic identifications. L must be a
// multiple of 6 so that three-colorability and the stripe deformations
// survive the wrap-around.
Lattice build_hex_periodic(int L);

// Periodic lattice of (12k-1) x 6k hexagons whose second identification
// is sheared by `twist` primitive steps. The default twist of 1 chains
// the diagonal stripe domains into a single cycle.
Lattice build_hex_coprime(int k, int twist = 1);

// Triangular 4.8.8 (square-octagon) patch of odd distance d.
Lattice build_488_triangular(int d);

// Rotated surface code layout with d^2 qubits. Faces alternate X/Z roles.
Lattice build_square_surface(int d, bool rotated = true);

// Structural checks shared by tests and the code-info command.
bool faces_three_colorable(const Lattice& lat);
int max_faces_per_qubit(const Lattice& lat);
int min_faces_per_qubit(const Lattice& lat);

}  // namespace colorsim
