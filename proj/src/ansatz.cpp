#include "qpde/ansatz.hpp"

#include <numbers>
#include <stdexcept>

namespace qpde {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

Circuit so4_block(const std::vector<double>& params, int top, int bottom, int n_qubits) {
  if (params.size() != 6 && params.size() != 3)
    throw std::invalid_argument("so4_block expects 3 or 6 parameters");
  const bool full = params.size() == 6;
  Circuit c(n_qubits);
  c.push(GateOp::rz(kHalfPi, top));
  c.push(GateOp::rz(kHalfPi, bottom));
  c.push(GateOp::ry(kHalfPi, bottom));
  c.push(GateOp::cnot(bottom, top));
  c.push(GateOp::rz(params[0], top));
  c.push(GateOp::ry(params[1], top));
  c.push(GateOp::rz(params[2], top));
  if (full) {
    c.push(GateOp::rz(params[3], bottom));
    c.push(GateOp::ry(params[4], bottom));
    c.push(GateOp::rz(params[5], bottom));
  }
  c.push(GateOp::cnot(bottom, top));
  c.push(GateOp::ry(-kHalfPi, bottom));
  c.push(GateOp::rz(-kHalfPi, top));
  c.push(GateOp::rz(-kHalfPi, bottom));
  return c;
}

std::vector<std::pair<int, int>> bricklayer_pairs(int n_qubits, int layer) {
  std::vector<std::pair<int, int>> pairs;
  const int offset = (layer - 1) % 2;
  for (int q = offset; q + 1 < n_qubits; q += 2) pairs.emplace_back(q, q + 1);
  return pairs;
}

int block_count(const AnsatzConfig& cfg) {
  int count = 0;
  for (int layer = 1; layer <= cfg.depth; ++layer)
    count += static_cast<int>(bricklayer_pairs(cfg.n_qubits, layer).size());
  return count;
}

int parameter_count(const AnsatzConfig& cfg) {
  if (cfg.n_qubits < 2 || cfg.depth < 1)
    throw std::invalid_argument("ansatz needs n_qubits >= 2 and depth >= 1");
  int count = 0;
  for (int layer = 1; layer <= cfg.depth; ++layer) {
    const int per_block = (layer == 1) ? 3 : 6;
    count += per_block * static_cast<int>(bricklayer_pairs(cfg.n_qubits, layer).size());
  }
  return count;
}

Circuit build_ansatz(const AnsatzConfig& cfg, const std::vector<double>& lambda_c) {
  if (static_cast<int>(lambda_c.size()) != parameter_count(cfg))
    throw std::invalid_argument("parameter vector length mismatch");
  Circuit c(cfg.n_qubits);
  std::size_t next = 0;
  for (int layer = 1; layer <= cfg.depth; ++layer) {
    const std::size_t per_block = (layer == 1) ? 3 : 6;
    for (const auto& [top, bottom] : bricklayer_pairs(cfg.n_qubits, layer)) {
      std::vector<double> block(lambda_c.begin() + next, lambda_c.begin() + next + per_block);
      next += per_block;
      c.append(so4_block(block, top, bottom, cfg.n_qubits));
    }
  }
  return c;
}

Statevector ansatz_state(const AnsatzConfig& cfg, const std::vector<double>& lambda_c) {
  Statevector sv(cfg.n_qubits);
  sv.apply(build_ansatz(cfg, lambda_c));
  return sv;
}

}  // namespace qpde
