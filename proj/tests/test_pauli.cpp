#include <doctest.h>

#include "colorsim/pauli.hpp"
#include "colorsim/rng.hpp"

using namespace colorsim;

TEST_CASE("multiply follows the phase-free product rules") {
  auto x0 = pauli_from_string("X");
  auto z0 = pauli_from_string("Z");
  CHECK(multiply(x0, z0) == pauli_from_string("Y"));

  auto x01 = pauli_from_string("XXI");
  auto x12 = pauli_from_string("IXX");
  CHECK(multiply(x01, x12) == pauli_from_string("XIX"));

  // Self-inverse for arbitrary operators.
  CounterRng rng(7, 0);
  for (int trial = 0; trial < 50; ++trial) {
    PauliOperator p(23);
    for (std::size_t q = 0; q < p.n; ++q) p.set_pauli(q, rng.next_u64() & 3);
    CHECK(multiply(p, p).is_identity());
  }
}

TEST_CASE("multiply rejects size mismatch") {
  CHECK_THROWS(multiply(pauli_from_string("X"), pauli_from_string("XX")));
  CHECK_THROWS(commutes(pauli_from_string("X"), pauli_from_string("XX")));
}

TEST_CASE("commutes implements the symplectic product") {
  CHECK(commutes(pauli_from_string("X"), pauli_from_string("X")));
  CHECK_FALSE(commutes(pauli_from_string("X"), pauli_from_string("Z")));
  // Two overlapping anticommuting sites cancel.
  CHECK(commutes(pauli_from_string("XXX"), pauli_from_string("ZZI")));
}

TEST_CASE("commutes is symmetric") {
  CounterRng rng(13, 1);
  for (int trial = 0; trial < 200; ++trial) {
    PauliOperator a(17), b(17);
    for (std::size_t q = 0; q < 17; ++q) {
      a.set_pauli(q, rng.next_u64() & 3);
      b.set_pauli(q, rng.next_u64() & 3);
    }
    CHECK(commutes(a, b) == commutes(b, a));
  }
}

TEST_CASE("weight counts non-identity sites") {
  CHECK(pauli_from_string("IXYZII").weight() == 3);
  CHECK(PauliOperator::identity(80).weight() == 0);
  PauliOperator p(70);
  p.set_pauli(69, 3);
  CHECK(p.weight() == 1);
  CHECK(p.to_string().back() == 'Y');
}
