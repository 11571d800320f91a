#include <doctest.h>

#include "colorsim/code.hpp"
#include "colorsim/syndrome.hpp"

using namespace colorsim;

namespace {

void check_commutation_structure(const StabilizerCode& code) {
  for (std::size_t i = 0; i < code.generators.size(); ++i)
    for (std::size_t j = i + 1; j < code.generators.size(); ++j)
      CHECK(commutes(code.generators[i], code.generators[j]));
  for (const auto& lp : code.logicals) {
    CHECK_FALSE(commutes(lp.x_bar, lp.z_bar));
    for (const auto& g : code.generators) {
      CHECK(commutes(g, lp.x_bar));
      CHECK(commutes(g, lp.z_bar));
    }
  }
  for (std::size_t i = 0; i < code.logicals.size(); ++i) {
    for (std::size_t j = 0; j < code.logicals.size(); ++j) {
      if (i == j) continue;
      CHECK(commutes(code.logicals[i].x_bar, code.logicals[j].x_bar));
      CHECK(commutes(code.logicals[i].x_bar, code.logicals[j].z_bar));
    }
  }
}

}  // namespace

TEST_CASE("CSS color code on the distance-3 triangle") {
  StabilizerCode code = build_css_color_code(build_hex_triangular(3));
  CHECK(code.n == 7);
  CHECK(code.k == 1);
  check_commutation_structure(code);
  auto report = verify_distance(code, 3);
  CHECK(report.pass);
  auto report4 = verify_distance(code, 4);
  CHECK_FALSE(report4.pass);
  REQUIRE(report4.witness.has_value());
  CHECK(report4.witness->weight() == 3);
  CHECK(code.syndrome_free(*report4.witness));
  CHECK_FALSE(code.in_stabilizer_group(*report4.witness));
}

TEST_CASE("periodic color code encodes four qubits") {
  StabilizerCode code = build_css_color_code(build_hex_periodic(6));
  CHECK(code.n == 72);
  CHECK(code.k == 4);
  check_commutation_structure(code);
}

TEST_CASE("co-prime color code rank") {
  StabilizerCode code = build_css_color_code(build_hex_coprime(1));
  CHECK(code.n == 132);
  CHECK(code.k == 4);
}

TEST_CASE("4.8.8 code validity") {
  StabilizerCode d3 = build_css_color_code(build_488_triangular(3));
  CHECK(d3.n == 9);
  CHECK(d3.k == 1);
  check_commutation_structure(d3);
  CHECK(verify_distance(d3, 3).pass);

  StabilizerCode d5 = build_css_color_code(build_488_triangular(5));
  CHECK(d5.k == 1);
  check_commutation_structure(d5);
  CHECK(verify_distance(d5, 5).pass);
}

TEST_CASE("surface code assembly") {
  StabilizerCode d3 = build_css_surface_code(build_square_surface(3));
  CHECK(d3.n == 9);
  CHECK(d3.k == 1);
  check_commutation_structure(d3);
  CHECK(verify_distance(d3, 3).pass);
  CHECK_FALSE(verify_distance(d3, 4).pass);
}

TEST_CASE("stabilizers and logicals are syndrome free") {
  StabilizerCode code = build_css_color_code(build_hex_triangular(5));
  for (const auto& g : code.generators) CHECK(syndrome_of(code, g).weight() == 0);
  for (const auto& lp : code.logicals) {
    CHECK(syndrome_of(code, lp.x_bar).weight() == 0);
    CHECK(syndrome_of(code, lp.z_bar).weight() == 0);
  }
}

TEST_CASE("x3z3 deformation produces three-and-three stabilizers") {
  Lattice lat = build_hex_triangular(11);
  StabilizerCode css = build_css_color_code(lat);
  DeformationSpec mask = make_deformation(lat, Rational(1, 1), Rational(1, 6));
  StabilizerCode dw = apply_deformation(css, mask);
  CHECK(dw.k == css.k);
  check_commutation_structure(dw);
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    if (lat.faces[f].qubits.size() != 6) continue;
    for (int t = 0; t < 2; ++t) {
      const PauliOperator& g = dw.generators[2 * f + t];
      std::size_t xw = 0, zw = 0;
      for (int q : lat.faces[f].qubits) {
        unsigned c = g.pauli_at(q);
        if (c == 1) ++xw;
        if (c == 2) ++zw;
      }
      CHECK(xw == 3);
      CHECK(zw == 3);
    }
  }
}

TEST_CASE("deformation involution and triviality") {
  Lattice lat = build_hex_triangular(5);
  StabilizerCode css = build_css_color_code(lat);
  DeformationSpec zero = make_deformation(lat, Rational(0, 1), Rational(0, 1));
  StabilizerCode same = apply_deformation(css, zero);
  for (std::size_t g = 0; g < css.generators.size(); ++g)
    CHECK(same.generators[g] == css.generators[g]);

  DeformationSpec mask = make_deformation(lat, Rational(1, 1), Rational(1, 6));
  StabilizerCode twice = apply_deformation(apply_deformation(css, mask), mask);
  for (std::size_t g = 0; g < css.generators.size(); ++g)
    CHECK(twice.generators[g] == css.generators[g]);
}

TEST_CASE("x3z3 distance is preserved at d=5") {
  Lattice lat = build_hex_triangular(5);
  StabilizerCode dw =
      apply_deformation(build_css_color_code(lat), make_deformation(lat, {1, 1}, {1, 6}));
  CHECK(dw.k == 1);
  CHECK(verify_distance(dw, 5).pass);
}

TEST_CASE("measured stripe density matches the label") {
  struct Case {
    Rational kappa, phi;
    int d;
  };
  for (const Case& c : {Case{{1, 1}, {1, 6}, 5}, Case{{1, 1}, {1, 6}, 9}, Case{{1, 2}, {0, 1}, 5},
                        Case{{1, 2}, {0, 1}, 11}, Case{{2, 3}, {0, 1}, 7}, Case{{2, 3}, {0, 1}, 13},
                        Case{{3, 2}, {0, 1}, 5}, Case{{3, 2}, {0, 1}, 9}, Case{{2, 1}, {1, 2}, 5},
                        Case{{2, 1}, {1, 2}, 7}}) {
    Lattice lat = build_hex_triangular(c.d);
    DeformationSpec spec = make_deformation(lat, c.kappa, c.phi);
    CHECK(measured_kappa(lat, spec.pattern) == c.kappa);
  }
  // Periodic lattices measure around the wrap.
  Lattice torus = build_hex_periodic(6);
  DeformationSpec spec = make_deformation(torus, {1, 1}, {1, 6});
  CHECK(measured_kappa(torus, spec.pattern) == Rational(1, 1));
  Lattice cop = build_hex_coprime(1);
  CHECK(measured_kappa(cop, make_deformation(cop, {1, 1}, {1, 6}).pattern) == Rational(1, 1));
  // XZZX mask on the rotated surface.
  Lattice surf = build_square_surface(5);
  CHECK(measured_kappa(surf, make_deformation(surf, {1, 1}, {1, 4}).pattern) == Rational(1, 1));
}

TEST_CASE("unsupported deformation labels are rejected") {
  Lattice lat = build_hex_triangular(5);
  CHECK_THROWS(make_deformation(lat, {1, 1}, {0, 1}));
  CHECK_THROWS(make_deformation(lat, {1, 3}, {0, 1}));
  Lattice surf = build_square_surface(3);
  CHECK_THROWS(make_deformation(surf, {1, 2}, {1, 4}));
}

TEST_CASE("XZZX deformation turns every rotated-surface check into two-and-two") {
  Lattice lat = build_square_surface(5);
  StabilizerCode css = build_css_surface_code(lat);
  StabilizerCode xzzx = apply_deformation(css, make_deformation(lat, {1, 1}, {1, 4}));
  CHECK(xzzx.k == 1);
  check_commutation_structure(xzzx);
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    if (lat.faces[f].qubits.size() != 4) continue;
    std::size_t xw = 0, zw = 0;
    for (int q : lat.faces[f].qubits) {
      unsigned c = xzzx.generators[f].pauli_at(q);
      if (c == 1) ++xw;
      if (c == 2) ++zw;
    }
    CHECK(xw == 2);
    CHECK(zw == 2);
  }
  CHECK(verify_distance(xzzx, 3).pass);
}

TEST_CASE("pure logical counting on the distance-5 codes") {
  Lattice lat = build_hex_triangular(5);
  StabilizerCode css = build_css_color_code(lat);
  StabilizerCode dw = apply_deformation(css, make_deformation(lat, {1, 1}, {1, 6}));
  // Only one X-only logical survives the domain walls.
  CHECK(count_short_pure_logicals(dw, 1, 5) == 1);
  CHECK(count_short_pure_logicals(dw, 2, 5) == 1);
  // The CSS code has many.
  CHECK(count_short_pure_logicals(css, 2, 5) > 1);
  CHECK(count_short_pure_logicals(css, 1, 5) > 1);
  // Weight cap zero counts nothing.
  CHECK(count_short_pure_logicals(css, 1, 0) == 0);
}

TEST_CASE("logical extraction matches boundary strings up to stabilizers") {
  StabilizerCode code = build_css_color_code(build_hex_triangular(3));
  REQUIRE(code.logicals.size() == 1);
  // A weight-3 X string on the bottom boundary row is a logical X.
  PauliOperator boundary(code.n);
  const Lattice& lat = code.lattice;
  for (std::size_t q = 0; q < lat.num_qubits(); ++q)
    if (lat.qubits[q].a == 3) boundary.x.set(q, true);
  CHECK(boundary.weight() == 3);
  CHECK(code.syndrome_free(boundary));
  PauliOperator diff = multiply(boundary, code.logicals[0].x_bar);
  CHECK(code.in_stabilizer_group(diff));
}
