#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qpde/statevector.hpp"

using namespace qpde;
using namespace qpde::test;

namespace {

Circuit half_adder() {
  Circuit c(2);
  c.push(GateOp::cnot(0, 1));
  c.push(GateOp::x(0));
  return c;
}

CMatrix matrix_from_rows(int n, std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("gate matrices match the fundamental set") {
  const auto x = gate_matrix(GateKind::X);
  CHECK(x(0, 1) == cplx{1.0});
  CHECK(x(1, 0) == cplx{1.0});
  CHECK(x(0, 0) == cplx{});

  const auto cnot = gate_matrix(GateKind::CNOT);
  const auto expected =
      matrix_from_rows(4, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
  CHECK(cnot.max_abs_diff(expected) == 0.0);

  const auto ry0 = gate_matrix(GateKind::Ry, 0.0);
  CHECK(ry0.max_abs_diff(CMatrix::identity(2)) == 0.0);

  const auto y = gate_matrix(GateKind::Y);
  CHECK(y(0, 1) == cplx{0.0, -1.0});
  CHECK(y(1, 0) == cplx{0.0, 1.0});

  CHECK_THROWS(gate_matrix(GateKind::ControlledGeneric));
}

TEST_CASE("single-gate application follows the little-endian convention") {
  Statevector sv(2);
  sv.apply(GateOp::x(0));
  CHECK(std::abs(sv[1] - cplx{1.0}) < 1e-15);  // |00> -> |01>, qubit 0 least significant

  sv.apply(GateOp::cnot(0, 1));
  CHECK(std::abs(sv[3] - cplx{1.0}) < 1e-15);  // |01> -> |11>

  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    Statevector s(n);
    s.set_amplitudes(random_state(n, rng));
    const auto before = s.amplitudes();
    s.apply(GateOp::x(0));
    for (std::size_t b = 0; b < before.size(); ++b)
      CHECK(std::abs(s[b ^ 1] - before[b]) < 1e-14);
  }
}

TEST_CASE("half-adder maps basis states cyclically") {
  const auto c = half_adder();
  Statevector sv(2);
  sv.apply(GateOp::x(0));  // |01>
  sv.apply(c);
  CHECK(std::abs(sv[2] - cplx{1.0}) < 1e-15);  // |01> -> |10>

  const auto a = circuit_to_matrix(c);
  const auto expected =
      matrix_from_rows(4, {{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(a.max_abs_diff(expected) == 0.0);
}

TEST_CASE("circuit_to_matrix basics") {
  const Circuit empty(3);
  CHECK(circuit_to_matrix(empty).max_abs_diff(CMatrix::identity(8)) == 0.0);

  Circuit wide(11);
  CHECK_THROWS(circuit_to_matrix(wide));
}

TEST_CASE("invalid gate ops are rejected") {
  Statevector sv(2);
  CHECK_THROWS(sv.apply(GateOp::x(5)));
  CHECK_THROWS(sv.apply(GateOp::cnot(1, 1)));
  Circuit c(2);
  CHECK_THROWS(c.push(GateOp::cnot(0, 3)));
}

TEST_CASE("random circuits are unitary and consistent with their matrices") {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 6; ++n) {
    const auto c = random_circuit(n, 30, rng);
    const auto m = circuit_to_matrix(c);
    const auto gram = m * m.dagger();
    CHECK(gram.max_abs_diff(CMatrix::identity(1 << n)) < 1e-10);

    const auto v = random_state(n, rng);
    Statevector sv(n);
    sv.set_amplitudes(v);
    sv.apply(c);
    const auto mv = matvec(m, v);
    for (std::size_t i = 0; i < mv.size(); ++i) CHECK(std::abs(sv[i] - mv[i]) < 1e-10);
  }
}

TEST_CASE("formal gate-embedding product equals the column-image matrix") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    const auto c = random_circuit(n, 25, rng);
    const auto fast = circuit_to_matrix(c);
    const auto formal = circuit_matrix_formal(c);
    CHECK(fast.max_abs_diff(formal) < 1e-12);
  }
}

TEST_CASE("norm is preserved and normalize enforces unity") {
  std::mt19937_64 rng(11);
  Statevector sv(4);
  sv.set_amplitudes(random_state(4, rng));
  sv.apply(random_circuit(4, 60, rng));
  CHECK(std::abs(sv.norm() - 1.0) < 1e-12);

  Statevector z(2);
  z.set_amplitudes({cplx{3.0}, cplx{}, cplx{4.0}, cplx{}});
  z.normalize();
  CHECK(std::abs(z.norm() - 1.0) < 1e-12);
}

TEST_CASE("ancilla expectation from the reduced density matrix") {
  std::mt19937_64 rng(5);
  // ancilla |0>, arbitrary normalized rest
  Statevector sv(3);
  const auto rest = random_state(2, rng);
  std::vector<cplx> amps(8, cplx{});
  for (int i = 0; i < 4; ++i) amps[i] = rest[i];
  sv.set_amplitudes(amps);
  CHECK(sv.sigma_z_expectation(2) == Catch::Approx(1.0).margin(1e-12));

  // balanced unentangled superposition on the ancilla
  Statevector bal(3);
  bal.set_amplitudes(amps);
  bal.apply(GateOp::h(2));
  CHECK(bal.sigma_z_expectation(2) == Catch::Approx(0.0).margin(1e-12));

  // Hadamard test around an identity unit returns 1 for any input state
  for (int trial = 0; trial < 5; ++trial) {
    Statevector ht(3);
    std::vector<cplx> init(8, cplx{});
    const auto u = random_state(2, rng);
    for (int i = 0; i < 4; ++i) init[i] = u[i];
    ht.set_amplitudes(init);
    ht.apply(GateOp::h(2));
    ht.apply(GateOp::h(2));
    CHECK(ht.sigma_z_expectation(2) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("circuit inverse undoes the circuit") {
  std::mt19937_64 rng(9);
  const auto c = random_circuit(4, 40, rng);
  const auto v = random_state(4, rng);
  Statevector sv(4);
  sv.set_amplitudes(v);
  sv.apply(c);
  sv.apply(c.inverse());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(sv[i] - v[i]) < 1e-12);
}
