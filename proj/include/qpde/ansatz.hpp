#pragma once

#include <vector>

#include "qpde/statevector.hpp"

namespace qpde {

struct AnsatzConfig {
  int n_qubits = 2;
  int depth = 1;
};

/// One two-qubit SO4 unit on wires (top, bottom), top < bottom being the
/// less significant qubit. `params` has 6 entries, or 3 for first-layer
/// units whose second rotation triple is absent.
Circuit so4_block(const std::vector<double>& params, int top, int bottom, int n_qubits);

/// Qubit pairs carrying a block in each layer: layer 1 starts at qubit 0,
/// layer 2 at qubit 1, alternating. A qubit without a partner gets no block.
std::vector<std::pair<int, int>> bricklayer_pairs(int n_qubits, int layer);

int block_count(const AnsatzConfig& cfg);
int parameter_count(const AnsatzConfig& cfg);

/// Trial-state circuit U(lambda_c) on n qubits; applying it to |0...0>
/// yields the normalized trial state.
Circuit build_ansatz(const AnsatzConfig& cfg, const std::vector<double>& lambda_c);

/// Convenience: U(lambda_c)|0>.
Statevector ansatz_state(const AnsatzConfig& cfg, const std::vector<double>& lambda_c);

}  // namespace qpde
