#pragma once

#include <random>
#include <vector>

#include "qpde/statevector.hpp"

namespace qpde::test {

/// Independent full-register embedding of one gate op, assembled entry by
/// entry from the control/target definition rather than the simulator's
/// amplitude kernels.
inline CMatrix embed_op(const GateOp& op, int n_qubits) {
  const int dim = 1 << n_qubits;
  CMatrix base = [&] {
    switch (op.base) {
      case Gate::I: return gate_matrix(GateKind::I);
      case Gate::X: return gate_matrix(GateKind::X);
      case Gate::Y: return gate_matrix(GateKind::Y);
      case Gate::Z: return gate_matrix(GateKind::Z);
      case Gate::H: return gate_matrix(GateKind::H);
      case Gate::Ry: return gate_matrix(GateKind::Ry, op.angle);
      case Gate::Rz: return gate_matrix(GateKind::Rz, op.angle);
      case Gate::Phase: return gate_matrix(GateKind::Phase, op.angle);
    }
    return gate_matrix(GateKind::I);
  }();
  std::size_t cmask = 0;
  for (int c : op.controls) cmask |= std::size_t{1} << c;
  const std::size_t tmask = std::size_t{1} << op.target;
  CMatrix m(dim);
  for (int col = 0; col < dim; ++col) {
    const auto c = static_cast<std::size_t>(col);
    if ((c & cmask) != cmask) {
      m(col, col) = 1.0;
      continue;
    }
    const int tin = (c & tmask) ? 1 : 0;
    for (int tout = 0; tout < 2; ++tout) {
      const std::size_t row = tout ? (c | tmask) : (c & ~tmask);
      m(static_cast<int>(row), col) = base(tout, tin);
    }
  }
  return m;
}

/// "Formal way": left-multiply the embedded matrices op by op.
inline CMatrix circuit_matrix_formal(const Circuit& c) {
  CMatrix acc = CMatrix::identity(1 << c.n_qubits);
  for (const auto& op : c.ops) acc = embed_op(op, c.n_qubits) * acc;
  return acc;
}

inline std::vector<cplx> matvec(const CMatrix& m, const std::vector<cplx>& v) {
  std::vector<cplx> out(v.size(), cplx{});
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) out[r] += m(r, c) * v[c];
  return out;
}

inline std::vector<cplx> random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  std::vector<cplx> v(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  for (auto& a : v) {
    a = cplx{dist(rng), dist(rng)};
    norm2 += std::norm(a);
  }
  const double s = 1.0 / std::sqrt(norm2);
  for (auto& a : v) a *= s;
  return v;
}

inline std::vector<double> random_real_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  std::vector<double> v(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  for (auto& a : v) {
    a = dist(rng);
    norm2 += a * a;
  }
  const double s = 1.0 / std::sqrt(norm2);
  for (auto& a : v) a *= s;
  return v;
}

inline Circuit random_circuit(int n_qubits, int n_ops, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_kind(0, 7);
  std::uniform_int_distribution<int> pick_q(0, n_qubits - 1);
  std::uniform_real_distribution<double> pick_angle(0.0, 2 * 3.14159265358979);
  Circuit c(n_qubits);
  for (int i = 0; i < n_ops; ++i) {
    const int q = pick_q(rng);
    switch (pick_kind(rng)) {
      case 0: c.push(GateOp::x(q)); break;
      case 1: c.push(GateOp::z(q)); break;
      case 2: c.push(GateOp::h(q)); break;
      case 3: c.push(GateOp::ry(pick_angle(rng), q)); break;
      case 4: c.push(GateOp::rz(pick_angle(rng), q)); break;
      case 5: c.push(GateOp::y(q)); break;
      default: {
        if (n_qubits < 2) {
          c.push(GateOp::h(q));
          break;
        }
        int q2 = pick_q(rng);
        while (q2 == q) q2 = pick_q(rng);
        c.push(pick_kind(rng) % 2 ? GateOp::cnot(q, q2) : GateOp::cz(q, q2));
        break;
      }
    }
  }
  return c;
}

}  // namespace qpde::test
