#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qpde {

using cplx = std::complex<double>;

/// Base single-qubit operation of a gate; controls are stored on the op.
enum class Gate { I, X, Y, Z, H, Ry, Rz, Phase };

/// Spec-level gate kinds used for matrices and census reporting. A GateOp
/// maps onto one of these through its base gate and control count.
enum class GateKind {
  I,
  X,
  Y,
  Z,
  H,
  Ry,
  Rz,
  Phase,
  CNOT,
  CZ,
  Toffoli,
  MultiControlledX,
  MultiControlledZ,
  ControlledGeneric
};

struct GateOp {
  Gate base = Gate::I;
  double angle = 0.0;  // Ry/Rz/Phase
  int target = 0;
  std::vector<int> controls;

  GateKind kind() const;
  std::string name() const;
  GateOp inverse() const;

  static GateOp x(int t) { return {Gate::X, 0.0, t, {}}; }
  static GateOp y(int t) { return {Gate::Y, 0.0, t, {}}; }
  static GateOp z(int t) { return {Gate::Z, 0.0, t, {}}; }
  static GateOp h(int t) { return {Gate::H, 0.0, t, {}}; }
  static GateOp ry(double theta, int t) { return {Gate::Ry, theta, t, {}}; }
  static GateOp rz(double theta, int t) { return {Gate::Rz, theta, t, {}}; }
  static GateOp phase(double theta, int t) { return {Gate::Phase, theta, t, {}}; }
  static GateOp cnot(int c, int t) { return {Gate::X, 0.0, t, {c}}; }
  static GateOp cz(int a, int b) { return {Gate::Z, 0.0, b, {a}}; }
  static GateOp toffoli(int c1, int c2, int t) { return {Gate::X, 0.0, t, {c1, c2}}; }
  static GateOp mcx(std::vector<int> cs, int t) { return {Gate::X, 0.0, t, std::move(cs)}; }
  static GateOp mcz(std::vector<int> cs, int t) { return {Gate::Z, 0.0, t, std::move(cs)}; }
};

/// Ordered list of gate applications on a fixed-width register.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> ops;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void push(GateOp op);
  void append(const Circuit& other);           // same width
  Circuit inverse() const;
  Circuit controlled_on(int q) const;          // adds q as control to every op
  Circuit shifted(int offset, int new_width) const;  // remap all wires by offset
};

/// Dense complex matrix, row major. Only used on verification paths;
/// simulation itself never materializes circuit matrices.
struct CMatrix {
  int n = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  explicit CMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
  cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const cplx& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  static CMatrix identity(int dim);
  CMatrix dagger() const;
  CMatrix operator*(const CMatrix& rhs) const;
  double max_abs_diff(const CMatrix& rhs) const;
};

/// 2x2 (or 4x4 for the fixed two-qubit kinds) matrix of a gate kind,
/// little-endian basis ordering for the two-qubit ones.
CMatrix gate_matrix(GateKind kind, double angle = 0.0);

class Statevector {
 public:
  explicit Statevector(int n_qubits);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  void reset();  // back to |0...0>
  void set_amplitudes(std::vector<cplx> amps);
  double norm() const;
  void normalize();

  void apply(const GateOp& op);
  void apply(const Circuit& c);

  /// <sigma_z> of one qubit from the exact reduced density matrix:
  /// sum of |amp|^2 over basis states with the qubit at 0 minus the
  /// complement. No sampling.
  double sigma_z_expectation(int qubit) const;

 private:
  int n_;
  std::vector<cplx> amps_;
};

/// Full 2^n x 2^n unitary of a circuit, built column by column from basis
/// images. Guarded by a qubit cap to bound memory.
CMatrix circuit_to_matrix(const Circuit& c, int max_qubits = 10);

}  // namespace qpde
