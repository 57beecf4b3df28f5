#include <catch2/catch_amalgamated.hpp>
#include <numbers>

#include "helpers.hpp"
#include "qpde/ansatz.hpp"

using namespace qpde;
using namespace qpde::test;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;

std::vector<double> random_params(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 4 * std::numbers::pi);
  std::vector<double> v(count);
  for (auto& x : v) x = dist(rng);
  return v;
}
}  // namespace

TEST_CASE("so4 block is unitary and norm preserving") {
  const auto block = so4_block({0, 0, 0, 0, 0, 0}, 0, 1, 2);
  const auto m = circuit_to_matrix(block);
  CHECK((m * m.dagger()).max_abs_diff(CMatrix::identity(4)) < 1e-10);

  std::mt19937_64 rng(1);
  const auto params = random_params(6, rng);
  Statevector sv(2);
  sv.apply(so4_block(params, 0, 1, 2));
  CHECK(std::abs(sv.norm() - 1.0) < 1e-12);

  CHECK_THROWS(so4_block({0.0, 0.0}, 0, 1, 2));
}

TEST_CASE("so4 block equals the dense product of its printed gate sequence") {
  const std::vector<double> params{std::numbers::pi, 0, 0, 0, 0, 0};
  const auto block = so4_block(params, 0, 1, 2);

  // independent dense assembly, fixed rotations and both entanglers included
  auto e = [&](const GateOp& op) { return embed_op(op, 2); };
  CMatrix m = CMatrix::identity(4);
  m = e(GateOp::rz(kHalfPi, 0)) * m;
  m = e(GateOp::rz(kHalfPi, 1)) * m;
  m = e(GateOp::ry(kHalfPi, 1)) * m;
  m = e(GateOp::cnot(1, 0)) * m;
  m = e(GateOp::rz(params[0], 0)) * m;
  m = e(GateOp::ry(params[1], 0)) * m;
  m = e(GateOp::rz(params[2], 0)) * m;
  m = e(GateOp::rz(params[3], 1)) * m;
  m = e(GateOp::ry(params[4], 1)) * m;
  m = e(GateOp::rz(params[5], 1)) * m;
  m = e(GateOp::cnot(1, 0)) * m;
  m = e(GateOp::ry(-kHalfPi, 1)) * m;
  m = e(GateOp::rz(-kHalfPi, 0)) * m;
  m = e(GateOp::rz(-kHalfPi, 1)) * m;

  CHECK(circuit_to_matrix(block).max_abs_diff(m) < 1e-12);
}

TEST_CASE("parameter counts follow the bricklayer pattern") {
  CHECK(parameter_count({2, 1}) == 3);
  CHECK(parameter_count({4, 3}) == 24);
  CHECK(parameter_count({6, 2}) == 21);
  CHECK(parameter_count({2, 7}) == 21);
  CHECK(parameter_count({4, 5}) == 6 + 6 + 12 + 6 + 12);  // layers 1..5 on 4 qubits
  CHECK_THROWS(parameter_count({1, 1}));
  CHECK_THROWS(parameter_count({4, 0}));
}

TEST_CASE("bricklayer block layout matches the six-qubit reference") {
  CHECK(block_count({6, 4}) == 10);
  const auto layer1 = bricklayer_pairs(6, 1);
  REQUIRE(layer1.size() == 3);
  CHECK(layer1[0] == std::pair{0, 1});
  CHECK(layer1[2] == std::pair{4, 5});
  const auto layer2 = bricklayer_pairs(6, 2);
  REQUIRE(layer2.size() == 2);
  CHECK(layer2[0] == std::pair{1, 2});
  CHECK(layer2[1] == std::pair{3, 4});
}

TEST_CASE("ansatz output state is normalized for any parameters") {
  std::mt19937_64 rng(17);
  for (const AnsatzConfig cfg : {AnsatzConfig{2, 1}, AnsatzConfig{4, 3}, AnsatzConfig{6, 2}}) {
    const auto params = random_params(parameter_count(cfg), rng);
    const auto sv = ansatz_state(cfg, params);
    CHECK(std::abs(sv.norm() - 1.0) < 1e-12);
  }
  CHECK_THROWS(build_ansatz({2, 1}, {0.0}));
}

TEST_CASE("single-block ansatz equals the block itself") {
  std::mt19937_64 rng(23);
  const std::vector<double> zeros{0, 0, 0};
  const auto from_ansatz = ansatz_state({2, 1}, zeros);
  Statevector direct(2);
  direct.apply(so4_block(zeros, 0, 1, 2));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(from_ansatz[i] - direct[i]) < 1e-14);
}

TEST_CASE("gate count grows linearly in the register width") {
  // exact linearity: vanishing second differences over n for fixed depth
  for (int d : {1, 2, 3, 4}) {
    std::vector<std::size_t> counts;
    for (int n : {4, 6, 8, 10, 12})
      counts.push_back(
          build_ansatz({n, d}, std::vector<double>(parameter_count({n, d}), 0.3)).ops.size());
    for (std::size_t i = 2; i < counts.size(); ++i)
      CHECK(counts[i] - counts[i - 1] == counts[i - 1] - counts[i - 2]);
  }
  // per-doubling growth settles at two away from the small-n intercept
  for (int d : {1, 3}) {
    const auto c1 = build_ansatz({6, d}, std::vector<double>(parameter_count({6, d}), 0.3));
    const auto c2 = build_ansatz({12, d}, std::vector<double>(parameter_count({12, d}), 0.3));
    const double ratio = static_cast<double>(c2.ops.size()) / static_cast<double>(c1.ops.size());
    CHECK(ratio <= 2.2);
  }
}
