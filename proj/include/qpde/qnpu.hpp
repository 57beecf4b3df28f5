#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpde/statevector.hpp"

namespace qpde {

enum class Variant { Deep, Shallow };

/// A processing-unit circuit as it enters the Hadamard test. `body` spans
/// the data register plus any carry/working qubits above it. `cp_ops`
/// lists the ops that receive the measurement-ancilla control; the rest
/// self-neutralize when the ancilla is |0> (carry compute/uncompute pairs).
struct Qnpu {
  Circuit body;
  int n_data = 0;
  int n_carry = 0;
  std::vector<std::size_t> cp_ops;

  Qnpu inverted() const;
  void mark_all_cp();
};

/// Cyclic-shift (adder) unit: maps basis e_k to e_{k+1 mod 2^n} on the data
/// register. Half-adder for n = 2; ripple structure with n-2 carries above.
Qnpu laplace_qnpu(int n);

/// Register permutation T_t (same basis action as the adder). Deep variant
/// uses a multi-controlled NOT ladder on the data register only; shallow
/// variant is the carry-qubit form.
Qnpu transform_tt(int n, Variant variant);

/// Boundary unit B with T_t^-1 * B * T_t = C, where C couples only the
/// register ends for real states: <u|C|u> = 2 u_1 u_N.
Qnpu boundary_dn_qnpu(int n, Variant variant);

/// Boundary unit whose Hadamard-test expectation equals u_1^2 + u_N^2
/// (after T_t conjugation) for real states.
Qnpu boundary_n_qnpu(int n, Variant variant);

/// Pointwise-potential unit: P prepares the sample vector on n extra
/// qubits, then each data wire is copy-connected to its partner. The
/// Hadamard test yields sum_k p_k |u_k|^2 for the encoded normalized p.
Qnpu potential_qnpu(int n, const Circuit& p_gate);

/// Source-overlap unit: emits F^dagger; with a controlled trial circuit the
/// Hadamard test yields Re<f|u>.
Qnpu source_qnpu(int n, const Circuit& f_gate);

/// Replace a k-controlled gate (k >= 2) by a staggered Toffoli ladder over
/// k-1 carry qubits starting at carry_offset, the controlled base gate, and
/// the mirrored un-compute. Result width must be passed by the caller.
Circuit mcg_decompose(const GateOp& op, int carry_offset, int width);

struct GateCensus {
  std::map<std::string, int> by_name;
  int one_qubit = 0;
  int two_qubit = 0;
  int other = 0;

  int total() const { return one_qubit + two_qubit + other; }
};

/// Expand multi-qubit gates into one- and two-qubit gates: Toffoli via the
/// standard six-CNOT network, wider controls via parity-phase networks and
/// half-angle recursions. Exact (verified against the originals).
Circuit decompose_to_basic(const Circuit& c);

GateCensus gate_census(const Circuit& c, bool decompose);

/// Census of a unit in its Hadamard-test configuration: cp-marked ops get
/// one extra (ancilla) control before counting.
GateCensus qnpu_census(const Qnpu& q, bool decompose);

}  // namespace qpde
