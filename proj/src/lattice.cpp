#include "colorsim/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace colorsim {

namespace {

int floordiv(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int posmod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

// Hexagonal site lattice: sites (r, c); faces live on the sublattice
// (r + c) % 3 == 1, qubits on the other two. Face colors cycle with
// (r - c) mod 3.
bool hex_is_face_site(int r, int c) { return posmod(r + c, 3) == 1; }

FaceColor hex_face_color(int r, int c) {
  switch (posmod(r - c, 3)) {
    case 1: return FaceColor::kRed;
    case 0: return FaceColor::kGreen;
    default: return FaceColor::kBlue;
  }
}

// Neighbors of a site in cyclic order around it.
constexpr std::array<std::array<int, 2>, 6> kHexNeighbors{
    {{-1, -1}, {-1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, -1}}};

void finalize(Lattice& lat) {
  lat.site_index.clear();
  for (std::size_t i = 0; i < lat.qubits.size(); ++i) lat.site_index[lat.qubits[i]] = static_cast<int>(i);
  lat.qubit_faces.assign(lat.qubits.size(), {});
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    for (int q : lat.faces[f].qubits) lat.qubit_faces[q].push_back(static_cast<int>(f));
  }
}

}  // namespace

const char* to_string(FaceColor c) {
  switch (c) {
    case FaceColor::kRed: return "red";
    case FaceColor::kGreen: return "green";
    case FaceColor::kBlue: return "blue";
    default: return "none";
  }
}

int Lattice::qubit_index(Site s) const {
  auto it = site_index.find(canonical(s));
  return it == site_index.end() ? -1 : it->second;
}

Site Lattice::canonical(Site s) const {
  if (boundary.kind == BoundaryKind::kOpenTriangular) return s;
  if (boundary.kind == BoundaryKind::kPeriodic) {
    int L = dims[0];
    int t = floordiv(s.a, L);
    s.a -= t * L;
    s.b -= t * 2 * L;
    s.b = posmod(s.b, 3 * L);
    return s;
  }
  // Co-prime twisted: first identification is 6k * (1, -1), the second is
  // (12k-1) * (1, 2) + twist * (1, -1). Vectors with zero row component
  // are multiples of (0, 36k - 3). dims = (12k-1, 6k).
  int rows = dims[1];
  int t = floordiv(s.a, rows);
  s.a -= t * rows;
  s.b += t * rows;  // subtracting t * (rows, -rows)
  s.b = posmod(s.b, 3 * dims[0]);
  return s;
}

Lattice build_hex_triangular(int d) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("hex triangular: d must be odd and >= 3");
  Lattice lat;
  lat.kind = LatticeKind::kHex666;
  lat.boundary.kind = BoundaryKind::kOpenTriangular;
  lat.boundary.side_colors = {FaceColor::kRed, FaceColor::kGreen, FaceColor::kBlue};
  lat.distance = d;

  int rmax = 3 * (d - 1) / 2;
  std::map<Site, int> qidx;
  for (int r = 0; r <= rmax; ++r) {
    for (int c = 0; c <= r; ++c) {
      if (!hex_is_face_site(r, c)) {
        qidx[{r, c}] = static_cast<int>(lat.qubits.size());
        lat.qubits.push_back({r, c});
      }
    }
  }
  for (int r = 0; r <= rmax; ++r) {
    for (int c = 0; c <= r; ++c) {
      if (!hex_is_face_site(r, c)) continue;
      Face face;
      face.color = hex_face_color(r, c);
      face.center = {r, c};
      for (const auto& nb : kHexNeighbors) {
        auto it = qidx.find({r + nb[0], c + nb[1]});
        if (it != qidx.end()) face.qubits.push_back(it->second);
      }
      lat.faces.push_back(std::move(face));
    }
  }
  finalize(lat);
  return lat;
}

Lattice build_hex_periodic(int L) {
  if (L < 6 || L % 6 != 0) throw std::invalid_argument("hex periodic: L must be a multiple of 6");
  Lattice lat;
  lat.kind = LatticeKind::kHex666;
  lat.boundary.kind = BoundaryKind::kPeriodic;
  lat.boundary.identification = {{{0, 3 * L}, {L, 2 * L}}};
  lat.dims = {L, L};

  for (int r = 0; r < L; ++r) {
    for (int c = 0; c < 3 * L; ++c) {
      if (!hex_is_face_site(r, c)) {
        lat.site_index[{r, c}] = static_cast<int>(lat.qubits.size());
        lat.qubits.push_back({r, c});
      }
    }
  }
  for (int r = 0; r < L; ++r) {
    for (int c = 0; c < 3 * L; ++c) {
      if (!hex_is_face_site(r, c)) continue;
      Face face;
      face.color = hex_face_color(r, c);
      face.center = {r, c};
      for (const auto& nb : kHexNeighbors) {
        Site s = lat.canonical({r + nb[0], c + nb[1]});
        face.qubits.push_back(lat.site_index.at(s));
      }
      lat.faces.push_back(std::move(face));
    }
  }
  finalize(lat);
  return lat;
}

Lattice build_hex_coprime(int k, int twist) {
  if (k < 1) throw std::invalid_argument("hex coprime: k must be >= 1");
  // The shear must preserve the face sublattice, the face coloring and the
  // stripe-domain parity; twist = 1 always does.
  if (twist % 2 == 0 || posmod(twist, 3) != 1 || posmod(12 * k - 1 + twist, 6 * k) != 0)
    throw std::invalid_argument("hex coprime: unsupported twist offset");
  Lattice lat;
  lat.kind = LatticeKind::kHex666;
  lat.boundary.kind = BoundaryKind::kCoprimeTwisted;
  lat.boundary.twist = twist;
  lat.dims = {12 * k - 1, 6 * k};
  lat.boundary.identification = {
      {{6 * k, -6 * k}, {12 * k - 1 + twist, 2 * (12 * k - 1) - twist}}};

  int rows = 6 * k;
  int cols = 3 * (12 * k - 1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!hex_is_face_site(r, c)) {
        lat.site_index[{r, c}] = static_cast<int>(lat.qubits.size());
        lat.qubits.push_back({r, c});
      }
    }
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!hex_is_face_site(r, c)) continue;
      Face face;
      face.color = hex_face_color(r, c);
      face.center = {r, c};
      for (const auto& nb : kHexNeighbors) {
        Site s = lat.canonical({r + nb[0], c + nb[1]});
        face.qubits.push_back(lat.site_index.at(s));
      }
      lat.faces.push_back(std::move(face));
    }
  }
  finalize(lat);
  return lat;
}

Lattice build_488_triangular(int d) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("4.8.8 triangular: d must be odd and >= 3");
  int t = (d - 1) / 2;
  int S = 8 * t - 2;

  // Square cells at (I, J) with I+J even, corners (4I+-1, 4J+-1); octagon
  // cells at I+J odd take the two facing corners of each neighboring
  // square. The patch keeps faces whose centers satisfy x, y >= -2 and
  // x + y <= S, plus a two-qubit square stub completing the bottom corner
  // octagon, which makes the smallest instance the 9-qubit layout.
  auto square_corners = [](int I, int J) {
    return std::array<Site, 4>{{{4 * I - 1, 4 * J - 1},
                                {4 * I + 1, 4 * J - 1},
                                {4 * I + 1, 4 * J + 1},
                                {4 * I - 1, 4 * J + 1}}};
  };
  auto octagon_corners = [](int I, int J) {
    return std::array<Site, 8>{{{4 * (I - 1) + 1, 4 * J - 1},
                                {4 * (I - 1) + 1, 4 * J + 1},
                                {4 * (I + 1) - 1, 4 * J - 1},
                                {4 * (I + 1) - 1, 4 * J + 1},
                                {4 * I - 1, 4 * (J - 1) + 1},
                                {4 * I + 1, 4 * (J - 1) + 1},
                                {4 * I - 1, 4 * (J + 1) - 1},
                                {4 * I + 1, 4 * (J + 1) - 1}}};
  };
  const std::set<Site> extra{{3, -3}, {5, -3}};
  auto in_region = [&](Site p) {
    return (p.a >= -2 && p.b >= -2 && p.a + p.b <= S) || extra.count(p) > 0;
  };
  auto center_in_region = [&](int I, int J) {
    return 4 * I >= -2 && 4 * J >= -2 && 4 * (I + J) <= S;
  };

  struct RawFace {
    bool is_square;
    int I, J;
    std::vector<Site> sites;
  };
  std::vector<RawFace> raw;
  int range = 2 * t + 3;
  for (int I = -2; I <= range; ++I) {
    for (int J = -2; J <= range; ++J) {
      bool is_square = (posmod(I + J, 2) == 0);
      bool special_stub = (is_square && I == 1 && J == -1);
      if (!center_in_region(I, J) && !special_stub) continue;
      std::vector<Site> kept;
      if (is_square) {
        for (Site p : square_corners(I, J))
          if (in_region(p)) kept.push_back(p);
      } else {
        for (Site p : octagon_corners(I, J))
          if (in_region(p)) kept.push_back(p);
      }
      if (kept.size() >= 2) raw.push_back({is_square, I, J, std::move(kept)});
    }
  }

  Lattice lat;
  lat.kind = LatticeKind::kLattice488;
  lat.boundary.kind = BoundaryKind::kOpenTriangular;
  lat.boundary.side_colors = {FaceColor::kGreen, FaceColor::kBlue, FaceColor::kRed};
  lat.distance = d;

  std::set<Site> all_sites;
  for (const auto& rf : raw)
    for (Site p : rf.sites) all_sites.insert(p);
  for (Site p : all_sites) {
    lat.site_index[p] = static_cast<int>(lat.qubits.size());
    lat.qubits.push_back(p);
  }
  for (const auto& rf : raw) {
    Face face;
    face.color = rf.is_square ? FaceColor::kRed
                              : (posmod(rf.I, 2) == 0 ? FaceColor::kGreen : FaceColor::kBlue);
    face.center = {4 * rf.I, 4 * rf.J};
    for (Site p : rf.sites) face.qubits.push_back(lat.site_index.at(p));
    lat.faces.push_back(std::move(face));
  }
  finalize(lat);
  return lat;
}

Lattice build_square_surface(int d, bool rotated) {
  if (d < 2) throw std::invalid_argument("square surface: d must be >= 2");
  Lattice lat;
  lat.kind = LatticeKind::kSquareSurface;
  lat.boundary.kind = BoundaryKind::kOpenTriangular;  // open patch
  lat.distance = d;

  if (rotated) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        lat.site_index[{i, j}] = static_cast<int>(lat.qubits.size());
        lat.qubits.push_back({i, j});
      }
    auto add_face = [&](int i, int j, FaceRole role) {
      Face face;
      face.color = FaceColor::kNone;
      face.role = role;
      face.center = {i, j};
      for (auto [di, dj] : std::array<std::array<int, 2>, 4>{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}) {
        auto it = lat.site_index.find({i + di, j + dj});
        if (it != lat.site_index.end()) face.qubits.push_back(it->second);
      }
      lat.faces.push_back(std::move(face));
    };
    for (int i = -1; i <= d - 1; ++i) {
      for (int j = -1; j <= d - 1; ++j) {
        bool x_type = posmod(i + j, 2) == 1;
        bool interior = (i >= 0 && i < d - 1 && j >= 0 && j < d - 1);
        bool top_bottom = (i == -1 || i == d - 1) && j >= 0 && j < d - 1;
        bool left_right = (j == -1 || j == d - 1) && i >= 0 && i < d - 1;
        if (interior || (x_type && top_bottom) || (!x_type && left_right))
          add_face(i, j, x_type ? FaceRole::kXType : FaceRole::kZType);
      }
    }
  } else {
    // Planar layout: qubits at (i + j) even on a (2d-1) x (2d-1) grid,
    // X checks at (odd, even) sites, Z checks at (even, odd).
    int m = 2 * d - 1;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if ((i + j) % 2 == 0) {
          lat.site_index[{i, j}] = static_cast<int>(lat.qubits.size());
          lat.qubits.push_back({i, j});
        }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if ((i + j) % 2 != 1) continue;
        Face face;
        face.color = FaceColor::kNone;
        face.role = (i % 2 == 1) ? FaceRole::kXType : FaceRole::kZType;
        face.center = {i, j};
        for (auto [di, dj] : std::array<std::array<int, 2>, 4>{{{-1, 0}, {0, 1}, {1, 0}, {0, -1}}}) {
          auto it = lat.site_index.find({i + di, j + dj});
          if (it != lat.site_index.end()) face.qubits.push_back(it->second);
        }
        lat.faces.push_back(std::move(face));
      }
    }
  }
  finalize(lat);
  return lat;
}

bool faces_three_colorable(const Lattice& lat) {
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    for (std::size_t g = f + 1; g < lat.faces.size(); ++g) {
      if (lat.faces[f].color != lat.faces[g].color) continue;
      const auto& qa = lat.faces[f].qubits;
      const auto& qb = lat.faces[g].qubits;
      for (int q : qa) {
        if (std::find(qb.begin(), qb.end(), q) != qb.end()) return false;
      }
    }
  }
  return true;
}

int max_faces_per_qubit(const Lattice& lat) {
  int m = 0;
  for (const auto& fs : lat.qubit_faces) m = std::max<int>(m, static_cast<int>(fs.size()));
  return m;
}

int min_faces_per_qubit(const Lattice& lat) {
  int m = lat.faces.empty() ? 0 : 1 << 20;
  for (const auto& fs : lat.qubit_faces) m = std::min<int>(m, static_cast<int>(fs.size()));
  return m;
}

}  // namespace colorsim
