#include "colorsim/code.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace colorsim {

namespace {

int posmod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

int floordiv(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

BitVec symplectic_row(const PauliOperator& p) {
  BitVec row(2 * p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    if (p.x.get(i)) row.set(i, true);
    if (p.z.get(i)) row.set(p.n + i, true);
  }
  return row;
}

PauliOperator pauli_from_row(const BitVec& row) {
  std::size_t n = row.size() / 2;
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.x.set(i, row.get(i));
    p.z.set(i, row.get(n + i));
  }
  return p;
}

// Symplectic product of two [x|z] rows.
bool sym_product(const BitVec& a, const BitVec& b) {
  std::size_t n = a.size() / 2;
  bool acc = false;
  for (std::size_t i = 0; i < n; ++i) {
    acc ^= (a.get(i) && b.get(n + i));
    acc ^= (a.get(n + i) && b.get(i));
  }
  return acc;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s), 1);
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int StabilizerCode::face_of_generator(int g) const {
  if (lattice.kind == LatticeKind::kSquareSurface) return g;
  return g / 2;
}

bool StabilizerCode::generator_is_x_type(int g) const {
  if (lattice.kind == LatticeKind::kSquareSurface)
    return lattice.faces[g].role == FaceRole::kXType;
  return g % 2 == 0;
}

BinaryMatrix StabilizerCode::symplectic_matrix() const {
  BinaryMatrix m(generators.size(), 2 * static_cast<std::size_t>(n));
  for (std::size_t g = 0; g < generators.size(); ++g) m.row(g) = symplectic_row(generators[g]);
  return m;
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator& p) const {
  return in_row_space(symplectic_matrix(), symplectic_row(p));
}

bool StabilizerCode::syndrome_free(const PauliOperator& p) const {
  for (const auto& g : generators)
    if (!commutes(g, p)) return false;
  return true;
}

static StabilizerCode assemble(const Lattice& lat, std::vector<PauliOperator> gens) {
  StabilizerCode code;
  code.lattice = lat;
  code.n = static_cast<int>(lat.num_qubits());
  code.d_target = lat.distance;
  code.generators = std::move(gens);
  code.deformation.pattern = BitVec(code.n);

  BinaryMatrix m(code.generators.size(), 2 * static_cast<std::size_t>(code.n));
  for (std::size_t g = 0; g < code.generators.size(); ++g)
    m.row(g) = symplectic_row(code.generators[g]);
  code.k = code.n - static_cast<int>(m.rank());
  code.logicals = extract_logicals(code.generators);
  return code;
}

StabilizerCode build_css_color_code(const Lattice& lat) {
  if (!lat.is_color_code()) throw std::invalid_argument("build_css_color_code: not a color-code lattice");
  std::vector<PauliOperator> gens;
  gens.reserve(2 * lat.faces.size());
  for (const auto& face : lat.faces) {
    PauliOperator px(lat.num_qubits()), pz(lat.num_qubits());
    for (int q : face.qubits) {
      px.x.set(q, true);
      pz.z.set(q, true);
    }
    gens.push_back(px);
    gens.push_back(pz);
  }
  return assemble(lat, std::move(gens));
}

StabilizerCode build_css_surface_code(const Lattice& lat) {
  if (lat.kind != LatticeKind::kSquareSurface)
    throw std::invalid_argument("build_css_surface_code: wrong lattice kind");
  std::vector<PauliOperator> gens;
  gens.reserve(lat.faces.size());
  for (const auto& face : lat.faces) {
    PauliOperator p(lat.num_qubits());
    for (int q : face.qubits) {
      if (face.role == FaceRole::kXType)
        p.x.set(q, true);
      else
        p.z.set(q, true);
    }
    gens.push_back(p);
  }
  return assemble(lat, std::move(gens));
}

namespace {

// Stripe mask value for a hexagonal qubit column m. Columns m = 2c - r;
// face columns sit at m = 2 (mod 3), qubit columns at 0 and 1.
bool hex_stripe_value(const Rational& kappa, int m, int phase) {
  if (kappa == Rational(0, 1)) return false;
  if (kappa == Rational(1, 1)) return posmod(floordiv(m, 3) + phase, 2) == 1;
  if (kappa == Rational(1, 2)) return posmod(floordiv(m - 3 * phase, 6), 2) == 1;
  if (kappa == Rational(2, 3)) {
    int rho = posmod(m - 3 * phase, 9);
    return rho == 3 || rho == 4;
  }
  if (kappa == Rational(3, 2)) {
    static const int value_of[12] = {0, 1, -1, 0, 1, -1, 0, 1, -1, 1, 0, -1};
    int v = value_of[posmod(m - 3 * phase, 12)];
    return v == 1;
  }
  if (kappa == Rational(2, 1)) return posmod(m - phase, 3) == 1;
  throw std::invalid_argument("unsupported stripe density");
}

}  // namespace

DeformationSpec make_deformation(const Lattice& lat, Rational kappa, Rational phi_pi,
                                 int stripe_phase) {
  DeformationSpec spec;
  spec.kappa = kappa;
  spec.phi_pi = phi_pi;
  spec.pattern = BitVec(lat.num_qubits());
  if (kappa == Rational(0, 1)) return spec;

  if (lat.kind == LatticeKind::kHex666) {
    struct Supported {
      Rational kappa, phi;
    };
    static const Supported kSupported[] = {
        {{1, 2}, {0, 1}}, {{2, 3}, {0, 1}}, {{1, 1}, {1, 6}}, {{3, 2}, {0, 1}}, {{2, 1}, {1, 2}}};
    bool ok = false;
    for (const auto& s : kSupported)
      if (s.kappa == kappa && s.phi == phi_pi) ok = true;
    if (!ok) throw std::invalid_argument("make_deformation: unsupported (kappa, phi) for 6.6.6");
    for (std::size_t q = 0; q < lat.num_qubits(); ++q)
      spec.pattern.set(q, hex_stripe_value(kappa, lat.stripe_coordinate(static_cast<int>(q)),
                                           stripe_phase));
    return spec;
  }
  if (lat.kind == LatticeKind::kSquareSurface) {
    if (!(kappa == Rational(1, 1) && phi_pi == Rational(1, 4)))
      throw std::invalid_argument("make_deformation: unsupported (kappa, phi) for square lattice");
    for (std::size_t q = 0; q < lat.num_qubits(); ++q) {
      int diag = lat.qubits[q].a + lat.qubits[q].b;
      spec.pattern.set(q, posmod(diag + stripe_phase, 2) == 1);
    }
    return spec;
  }
  throw std::invalid_argument("make_deformation: unsupported lattice kind");
}

Rational measured_kappa(const Lattice& lat, const BitVec& pattern) {
  if (!pattern.any()) return Rational(0, 1);
  if (lat.kind == LatticeKind::kSquareSurface) {
    std::map<int, bool> diag_value;
    for (std::size_t q = 0; q < lat.num_qubits(); ++q) {
      int diag = lat.qubits[q].a + lat.qubits[q].b;
      auto it = diag_value.find(diag);
      if (it == diag_value.end())
        diag_value[diag] = pattern.get(q);
      else if (it->second != pattern.get(q))
        throw std::invalid_argument("measured_kappa: mask is not constant on diagonals");
    }
    int transitions = 0;
    bool prev = false, first = true;
    for (auto [diag, v] : diag_value) {
      if (!first && v != prev) ++transitions;
      prev = v;
      first = false;
    }
    // A unit of rotated-layout code distance spans two diagonals.
    return Rational(transitions, 2 * (lat.distance - 1));
  }

  // Hexagonal lattices: value per occupied stripe column.
  std::map<int, bool> col_value;
  bool periodic = lat.boundary.kind != BoundaryKind::kOpenTriangular;
  int period = 0;
  if (periodic) {
    auto dm = [](const std::array<int, 2>& v) { return 2 * v[1] - v[0]; };
    period = std::gcd(std::abs(dm(lat.boundary.identification[0])),
                      std::abs(dm(lat.boundary.identification[1])));
  }
  for (std::size_t q = 0; q < lat.num_qubits(); ++q) {
    int m = lat.stripe_coordinate(static_cast<int>(q));
    if (periodic) m = posmod(m, period);
    auto it = col_value.find(m);
    if (it == col_value.end())
      col_value[m] = pattern.get(q);
    else if (it->second != pattern.get(q))
      throw std::invalid_argument("measured_kappa: mask is not constant on stripe columns");
  }
  int transitions = 0;
  bool prev = false, first = true;
  for (auto [m, v] : col_value) {
    if (!first && v != prev) ++transitions;
    prev = v;
    first = false;
  }
  if (periodic) {
    if (col_value.begin()->second != col_value.rbegin()->second) ++transitions;
    return Rational(3 * transitions, period);
  }
  return Rational(transitions, lat.distance - 1);
}

StabilizerCode apply_deformation(const StabilizerCode& code, const DeformationSpec& spec) {
  if (spec.pattern.size() != static_cast<std::size_t>(code.n))
    throw std::invalid_argument("apply_deformation: mask length mismatch");
  auto conjugate = [&](const PauliOperator& p) {
    PauliOperator out = p;
    const auto& mask = spec.pattern.words();
    auto& xw = out.x.words();
    auto& zw = out.z.words();
    for (std::size_t w = 0; w < mask.size(); ++w) {
      std::uint64_t xs = xw[w], zs = zw[w], m = mask[w];
      xw[w] = (xs & ~m) | (zs & m);
      zw[w] = (zs & ~m) | (xs & m);
    }
    return out;
  };
  StabilizerCode out = code;
  out.deformation = spec;
  for (auto& g : out.generators) g = conjugate(g);
  for (auto& lp : out.logicals) {
    lp.x_bar = conjugate(lp.x_bar);
    lp.z_bar = conjugate(lp.z_bar);
  }
  return out;
}

std::vector<LogicalPair> extract_logicals(const std::vector<PauliOperator>& generators) {
  if (generators.empty()) return {};
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commutes(generators[i], generators[j]))
        throw std::invalid_argument("extract_logicals: generators do not commute");

  std::size_t n = generators[0].n;
  BinaryMatrix gmat(generators.size(), 2 * n);
  for (std::size_t g = 0; g < generators.size(); ++g) gmat.row(g) = symplectic_row(generators[g]);

  // Normalizer = kernel of the symplectically-swapped generator matrix.
  BinaryMatrix swapped(generators.size(), 2 * n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    BitVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (p.z.get(i)) row.set(i, true);
      if (p.x.get(i)) row.set(n + i, true);
    }
    swapped.row(g) = row;
  }
  std::vector<BitVec> normalizer = kernel_basis(swapped);

  // Quotient by the stabilizer row space: keep kernel vectors that extend
  // the span of the generators.
  BinaryMatrix accum = gmat;
  std::size_t base_rank = accum.rank();
  std::vector<BitVec> reps;
  for (const auto& v : normalizer) {
    BinaryMatrix trial = accum;
    trial.append_row(v);
    if (trial.rank() > base_rank) {
      accum.append_row(v);
      base_rank += 1;
      reps.push_back(v);
    }
  }

  // Symplectic pairing.
  std::vector<LogicalPair> pairs;
  std::vector<BitVec> pool = reps;
  while (!pool.empty()) {
    BitVec a = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (sym_product(a, pool[i])) {
        partner = i;
        break;
      }
    }
    if (partner == pool.size())
      throw std::logic_error("extract_logicals: unpaired normalizer element");
    BitVec b = pool[partner];
    pool.erase(pool.begin() + static_cast<long>(partner));
    for (auto& c : pool) {
      if (sym_product(c, b)) c ^= a;
      if (sym_product(c, a)) c ^= b;
    }
    PauliOperator pa = pauli_from_row(a), pb = pauli_from_row(b);
    // Prefer the X-only representative (when one exists) as x_bar.
    bool a_pure_x = !pa.z.any(), b_pure_x = !pb.z.any();
    bool a_pure_z = !pa.x.any();
    LogicalPair lp;
    if (b_pure_x && !a_pure_x) {
      lp.x_bar = pb;
      lp.z_bar = pa;
    } else if (a_pure_z && !b_pure_x) {
      lp.x_bar = pb;
      lp.z_bar = pa;
    } else {
      lp.x_bar = pa;
      lp.z_bar = pb;
    }
    pairs.push_back(std::move(lp));
  }
  return pairs;
}

namespace {

// Incremental syndrome bits for pure-type searches, packed into words.
struct SyndromeMasks {
  std::vector<std::vector<std::uint64_t>> per_qubit;  // [qubit][word]
  std::size_t words = 0;
};

SyndromeMasks build_masks(const StabilizerCode& code, bool error_is_x) {
  SyndromeMasks sm;
  sm.words = (code.generators.size() + 63) / 64;
  sm.per_qubit.assign(code.n, std::vector<std::uint64_t>(sm.words, 0));
  for (std::size_t g = 0; g < code.generators.size(); ++g) {
    const auto& gen = code.generators[g];
    for (int q = 0; q < code.n; ++q) {
      // X errors anticommute with Z/Y parts, Z errors with X/Y parts.
      bool hits = error_is_x ? gen.z.get(q) : gen.x.get(q);
      if (hits) sm.per_qubit[q][g >> 6] ^= std::uint64_t{1} << (g & 63);
    }
  }
  return sm;
}

}  // namespace

long long count_short_pure_logicals(const StabilizerCode& code, unsigned pauli_code,
                                    int weight_cap) {
  if (pauli_code != 1 && pauli_code != 2)
    throw std::invalid_argument("count_short_pure_logicals: pauli type must be X or Z");
  if (weight_cap <= 0) return 0;
  if (code.n > 44) throw BudgetExceeded("count_short_pure_logicals: n too large for search");

  bool error_is_x = (pauli_code == 1);
  SyndromeMasks sm = build_masks(code, error_is_x);

  // Generators close once the largest qubit of their sensitive support has
  // been decided; from then on their syndrome bit must stay zero.
  std::vector<std::vector<std::uint64_t>> closed_after(code.n + 1,
                                                       std::vector<std::uint64_t>(sm.words, 0));
  for (std::size_t g = 0; g < code.generators.size(); ++g) {
    const auto& gen = code.generators[g];
    int last = -1;
    for (int q = 0; q < code.n; ++q) {
      bool hits = error_is_x ? gen.z.get(q) : gen.x.get(q);
      if (hits) last = q;
    }
    if (last >= 0) closed_after[last + 1][g >> 6] |= std::uint64_t{1} << (g & 63);
  }
  for (int q = 1; q <= code.n; ++q)
    for (std::size_t w = 0; w < sm.words; ++w) closed_after[q][w] |= closed_after[q - 1][w];

  BinaryMatrix stab = code.symplectic_matrix();
  long long count = 0;
  std::vector<std::uint64_t> syndrome(sm.words, 0);
  std::vector<int> support;
  long long nodes = 0;

  auto is_logical = [&](const std::vector<int>& supp) {
    PauliOperator p(code.n);
    for (int q : supp) {
      if (error_is_x)
        p.x.set(q, true);
      else
        p.z.set(q, true);
    }
    return !in_row_space(stab, symplectic_row(p));
  };

  std::function<void(int, int)> dfs = [&](int q, int weight) {
    if (++nodes > 400000000LL) throw BudgetExceeded("count_short_pure_logicals: search budget exceeded");
    // All generators closed by position q must be satisfied.
    for (std::size_t w = 0; w < sm.words; ++w)
      if (syndrome[w] & closed_after[q][w]) return;
    if (q == code.n) {
      for (std::size_t w = 0; w < sm.words; ++w)
        if (syndrome[w]) return;
      if (!support.empty() && is_logical(support)) ++count;
      return;
    }
    dfs(q + 1, weight);
    if (weight < weight_cap) {
      for (std::size_t w = 0; w < sm.words; ++w) syndrome[w] ^= sm.per_qubit[q][w];
      support.push_back(q);
      dfs(q + 1, weight + 1);
      support.pop_back();
      for (std::size_t w = 0; w < sm.words; ++w) syndrome[w] ^= sm.per_qubit[q][w];
    }
  };
  dfs(0, 0);
  return count;
}

DistanceReport verify_distance(const StabilizerCode& code, int d_target) {
  if (code.n > 25) throw BudgetExceeded("verify_distance: n too large for exhaustive search");
  BinaryMatrix stab = code.symplectic_matrix();

  // Per-qubit, per-pauli syndrome masks over the generators (<= 64 handled
  // in chunks of words).
  std::size_t words = (code.generators.size() + 63) / 64;
  std::vector<std::array<std::vector<std::uint64_t>, 4>> masks(code.n);
  for (int q = 0; q < code.n; ++q)
    for (unsigned c = 0; c < 4; ++c) masks[q][c].assign(words, 0);
  for (std::size_t g = 0; g < code.generators.size(); ++g) {
    const auto& gen = code.generators[g];
    for (int q = 0; q < code.n; ++q) {
      unsigned gc = gen.pauli_at(q);
      if (gc == 0) continue;
      for (unsigned ec = 1; ec < 4; ++ec) {
        // anticommute at this qubit iff both nontrivial and different
        if (ec != gc) masks[q][ec][g >> 6] ^= std::uint64_t{1} << (g & 63);
      }
    }
  }

  std::vector<int> support;
  std::vector<unsigned> paulis;
  std::vector<std::uint64_t> syndrome(words, 0);
  DistanceReport report;
  report.pass = true;

  std::function<bool(int, int, int)> dfs = [&](int start, int remaining, int) -> bool {
    if (remaining == 0) {
      for (std::size_t w = 0; w < words; ++w)
        if (syndrome[w]) return false;
      PauliOperator p(code.n);
      for (std::size_t i = 0; i < support.size(); ++i) p.set_pauli(support[i], paulis[i]);
      if (!in_row_space(stab, symplectic_row(p))) {
        report.pass = false;
        report.witness = p;
        return true;
      }
      return false;
    }
    for (int q = start; q + remaining <= code.n; ++q) {
      for (unsigned c = 1; c < 4; ++c) {
        for (std::size_t w = 0; w < words; ++w) syndrome[w] ^= masks[q][c][w];
        support.push_back(q);
        paulis.push_back(c);
        if (dfs(q + 1, remaining - 1, 0)) return true;
        support.pop_back();
        paulis.pop_back();
        for (std::size_t w = 0; w < words; ++w) syndrome[w] ^= masks[q][c][w];
      }
    }
    return false;
  };

  for (int w = 1; w < d_target && report.pass; ++w) dfs(0, w, 0);
  return report;
}

}  // namespace colorsim
