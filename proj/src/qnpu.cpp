#include "qpde/qnpu.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>

namespace qpde {

namespace {
constexpr double kPi = std::numbers::pi;
}

Qnpu Qnpu::inverted() const {
  Qnpu inv;
  inv.body = body.inverse();
  inv.n_data = n_data;
  inv.n_carry = n_carry;
  const std::size_t n = body.ops.size();
  inv.cp_ops.reserve(cp_ops.size());
  for (auto i : cp_ops) inv.cp_ops.push_back(n - 1 - i);
  std::sort(inv.cp_ops.begin(), inv.cp_ops.end());
  return inv;
}

void Qnpu::mark_all_cp() {
  cp_ops.resize(body.ops.size());
  for (std::size_t i = 0; i < cp_ops.size(); ++i) cp_ops[i] = i;
}

Qnpu laplace_qnpu(int n) {
  if (n < 2) throw std::invalid_argument("laplace_qnpu needs n >= 2");
  Qnpu q;
  q.n_data = n;
  if (n == 2) {
    q.body = Circuit(2);
    q.body.push(GateOp::cnot(0, 1));
    q.body.push(GateOp::x(0));
    q.cp_ops = {0, 1};
    return q;
  }
  const int m = n - 2;
  q.n_carry = m;
  q.body = Circuit(n + m);
  auto carry = [&](int j) { return n + j; };
  auto& c = q.body;

  c.push(GateOp::cnot(0, carry(0)));
  q.cp_ops.push_back(0);
  for (int j = 1; j < m; ++j) c.push(GateOp::toffoli(carry(j - 1), j, carry(j)));
  c.push(GateOp::toffoli(carry(m - 1), n - 2, n - 1));
  if (n >= 4) c.push(GateOp::cnot(carry(m - 1), n - 2));
  for (int j = m - 1; j >= 1; --j) {
    c.push(GateOp::toffoli(carry(j - 1), j, carry(j)));
    if (j >= 2) c.push(GateOp::cnot(carry(j - 1), j));
  }
  q.cp_ops.push_back(c.ops.size());
  c.push(GateOp::cnot(0, carry(0)));
  q.cp_ops.push_back(c.ops.size());
  c.push(GateOp::cnot(0, 1));
  q.cp_ops.push_back(c.ops.size());
  c.push(GateOp::x(0));
  std::sort(q.cp_ops.begin(), q.cp_ops.end());
  return q;
}

Qnpu transform_tt(int n, Variant variant) {
  if (n < 2) throw std::invalid_argument("transform_tt needs n >= 2");
  if (variant == Variant::Shallow) return laplace_qnpu(n);
  Qnpu q;
  q.n_data = n;
  q.body = Circuit(n);
  for (int tgt = n - 1; tgt >= 1; --tgt) {
    std::vector<int> controls(tgt);
    for (int i = 0; i < tgt; ++i) controls[i] = i;
    q.body.push(GateOp::mcx(std::move(controls), tgt));
  }
  q.body.push(GateOp::x(0));
  q.mark_all_cp();
  return q;
}

namespace {

/// Append `op` (a multi-controlled gate) either as-is (Deep) or as its
/// carry-ladder decomposition (Shallow). Returns the index range of the
/// middle gate so callers can cp-mark only it in the shallow form.
void emit_mcg(Circuit& c, std::vector<std::size_t>& cp, const GateOp& op, Variant variant,
              int carry_offset) {
  if (variant == Variant::Deep || op.controls.size() <= 2) {
    cp.push_back(c.ops.size());
    c.push(op);
    return;
  }
  const Circuit ladder = mcg_decompose(op, carry_offset, c.n_qubits);
  const std::size_t mid = ladder.ops.size() / 2;  // ladder is palindromic around the base gate
  for (std::size_t i = 0; i < ladder.ops.size(); ++i) {
    if (i == mid) cp.push_back(c.ops.size());
    c.push(ladder.ops[i]);
  }
}

}  // namespace

Qnpu boundary_dn_qnpu(int n, Variant variant) {
  if (n < 2) throw std::invalid_argument("boundary_dn_qnpu needs n >= 2");
  Qnpu q;
  q.n_data = n;
  const int n_carry = (variant == Variant::Shallow && n >= 4) ? n - 2 : 0;
  q.n_carry = n_carry;
  auto& c = q.body;
  c = Circuit(n + n_carry);

  for (int qb = 1; qb < n; ++qb) {
    q.cp_ops.push_back(c.ops.size());
    c.push(GateOp::x(qb));
  }
  for (int qb = 1; qb < n; ++qb) {
    q.cp_ops.push_back(c.ops.size());
    c.push(GateOp::z(qb));
  }
  {
    std::vector<int> controls(n - 1);
    for (int i = 0; i < n - 1; ++i) controls[i] = i;
    emit_mcg(c, q.cp_ops, GateOp::mcz(std::move(controls), n - 1), variant, n);
  }
  for (int qb = 0; qb < n; ++qb) {
    q.cp_ops.push_back(c.ops.size());
    c.push(GateOp::x(qb));
  }
  for (int qb = 0; qb < n; ++qb) {
    q.cp_ops.push_back(c.ops.size());
    c.push(GateOp::z(qb));
  }
  if (n % 2 == 1) {
    // ZXZX = -I on one wire; keeps both corner couplings at +1 for odd n.
    for (int k = 0; k < 2; ++k) {
      q.cp_ops.push_back(c.ops.size());
      c.push(GateOp::z(0));
      q.cp_ops.push_back(c.ops.size());
      c.push(GateOp::x(0));
    }
  }
  return q;
}

Qnpu boundary_n_qnpu(int n, Variant variant) {
  if (n < 2) throw std::invalid_argument("boundary_n_qnpu needs n >= 2");
  Qnpu q;
  q.n_data = n;
  const int n_carry = (variant == Variant::Shallow && n >= 4) ? n - 2 : 0;
  q.n_carry = n_carry;
  auto& c = q.body;
  c = Circuit(n + n_carry);

  for (int qb = 1; qb < n; ++qb) {
    q.cp_ops.push_back(c.ops.size());
    c.push(GateOp::x(qb));
  }
  q.cp_ops.push_back(c.ops.size());
  c.push(GateOp::z(0));
  {
    std::vector<int> controls(n - 1);
    for (int i = 0; i < n - 1; ++i) controls[i] = i;
    emit_mcg(c, q.cp_ops, GateOp::mcz(std::move(controls), n - 1), variant, n);
  }
  {
    std::vector<int> controls(n - 1);
    for (int i = 0; i < n - 1; ++i) controls[i] = i + 1;
    emit_mcg(c, q.cp_ops, GateOp::mcx(std::move(controls), 0), variant, n);
  }
  for (int qb = 1; qb < n; ++qb) {
    q.cp_ops.push_back(c.ops.size());
    c.push(GateOp::x(qb));
  }
  q.cp_ops.push_back(c.ops.size());
  c.push(GateOp::x(0));
  return q;
}

Qnpu potential_qnpu(int n, const Circuit& p_gate) {
  if (p_gate.n_qubits != n)
    throw std::invalid_argument("potential gate must act on the data width");
  Qnpu q;
  q.n_data = n;
  q.n_carry = n;
  q.body = Circuit(2 * n);
  q.body.append(p_gate.shifted(n, 2 * n));
  for (int k = 0; k < n; ++k) q.body.push(GateOp::cnot(k, n + k));
  q.mark_all_cp();
  return q;
}

Qnpu source_qnpu(int n, const Circuit& f_gate) {
  if (f_gate.n_qubits != n)
    throw std::invalid_argument("source gate must act on the data width");
  Qnpu q;
  q.n_data = n;
  q.body = f_gate.inverse();
  q.mark_all_cp();
  return q;
}

Circuit mcg_decompose(const GateOp& op, int carry_offset, int width) {
  const int k = static_cast<int>(op.controls.size());
  if (k < 2) throw std::invalid_argument("mcg_decompose needs at least 2 controls");
  Circuit c(width);
  if (k == 2) {
    c.push(op);
    return c;
  }
  if (carry_offset + k - 1 > width)
    throw std::invalid_argument("mcg_decompose: insufficient carry qubits");
  std::vector<GateOp> ladder;
  ladder.push_back(GateOp::toffoli(op.controls[0], op.controls[1], carry_offset));
  for (int j = 2; j < k; ++j)
    ladder.push_back(GateOp::toffoli(carry_offset + j - 2, op.controls[j], carry_offset + j - 1));
  for (const auto& g : ladder) c.push(g);
  GateOp mid = op;
  mid.controls = {carry_offset + k - 2};
  c.push(mid);
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) c.push(*it);
  return c;
}

namespace {

void decompose_op(const GateOp& op, Circuit& out);

void emit(Circuit& out, GateOp op) { decompose_op(op, out); }

/// Diagonal phase e^{i theta} on the all-ones state of `wires`, expanded
/// over subset parities: prod x_i = 2^{1-m} * sum_S (-1)^{|S|+1} xor_S x.
void emit_parity_phase(Circuit& out, const std::vector<int>& wires, double theta) {
  const int m = static_cast<int>(wires.size());
  const double unit = theta / static_cast<double>(1 << (m - 1));
  for (int popcnt = 1; popcnt <= m; ++popcnt) {
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (std::popcount(mask) != popcnt) continue;
      std::vector<int> subset;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) subset.push_back(wires[i]);
      const int acc = subset.back();
      for (std::size_t i = 0; i + 1 < subset.size(); ++i)
        out.push(GateOp::cnot(subset[i], acc));
      const double sign = (popcnt % 2 == 1) ? 1.0 : -1.0;
      out.push(GateOp::phase(sign * unit, acc));
      for (std::size_t i = subset.size() - 1; i-- > 0;)
        out.push(GateOp::cnot(subset[i], acc));
    }
  }
}

void emit_toffoli_network(Circuit& out, int c1, int c2, int t) {
  const double quarter = kPi / 4;
  out.push(GateOp::h(t));
  out.push(GateOp::cnot(c2, t));
  out.push(GateOp::phase(-quarter, t));
  out.push(GateOp::cnot(c1, t));
  out.push(GateOp::phase(quarter, t));
  out.push(GateOp::cnot(c2, t));
  out.push(GateOp::phase(-quarter, t));
  out.push(GateOp::cnot(c1, t));
  out.push(GateOp::phase(quarter, c2));
  out.push(GateOp::phase(quarter, t));
  out.push(GateOp::h(t));
  out.push(GateOp::cnot(c1, c2));
  out.push(GateOp::phase(quarter, c1));
  out.push(GateOp::phase(-quarter, c2));
  out.push(GateOp::cnot(c1, c2));
}

void decompose_op(const GateOp& op, Circuit& out) {
  const int k = static_cast<int>(op.controls.size());
  if (k == 0) {
    out.push(op);
    return;
  }
  if (k == 1 && (op.base == Gate::X || op.base == Gate::Z)) {
    out.push(op);
    return;
  }
  const int t = op.target;
  switch (op.base) {
    case Gate::X: {
      if (k == 2) {
        emit_toffoli_network(out, op.controls[0], op.controls[1], t);
        return;
      }
      out.push(GateOp::h(t));
      GateOp z = op;
      z.base = Gate::Z;
      decompose_op(z, out);
      out.push(GateOp::h(t));
      return;
    }
    case Gate::Z: {
      std::vector<int> wires = op.controls;
      wires.push_back(t);
      emit_parity_phase(out, wires, kPi);
      return;
    }
    case Gate::Phase: {
      std::vector<int> wires = op.controls;
      wires.push_back(t);
      emit_parity_phase(out, wires, op.angle);
      return;
    }
    case Gate::Ry:
    case Gate::Rz: {
      if (k == 1) {
        const int c = op.controls[0];
        out.push(GateOp{op.base, op.angle / 2, t, {}});
        out.push(GateOp::cnot(c, t));
        out.push(GateOp{op.base, -op.angle / 2, t, {}});
        out.push(GateOp::cnot(c, t));
        return;
      }
      // half-angle split over the last control
      const int last = op.controls.back();
      std::vector<int> rest(op.controls.begin(), op.controls.end() - 1);
      emit(out, GateOp{op.base, op.angle / 2, t, {last}});
      emit(out, GateOp{Gate::X, 0.0, last, rest});
      emit(out, GateOp{op.base, -op.angle / 2, t, {last}});
      emit(out, GateOp{Gate::X, 0.0, last, rest});
      emit(out, GateOp{op.base, op.angle / 2, t, rest});
      return;
    }
    case Gate::H: {
      out.push(GateOp::ry(-kPi / 4, t));
      GateOp z = op;
      z.base = Gate::Z;
      decompose_op(z, out);
      out.push(GateOp::ry(kPi / 4, t));
      return;
    }
    case Gate::Y: {
      out.push(GateOp::phase(-kPi / 2, t));
      GateOp x = op;
      x.base = Gate::X;
      decompose_op(x, out);
      out.push(GateOp::phase(kPi / 2, t));
      return;
    }
    case Gate::I:
      return;
  }
}

}  // namespace

Circuit decompose_to_basic(const Circuit& c) {
  Circuit out(c.n_qubits);
  for (const auto& op : c.ops) decompose_op(op, out);
  return out;
}

GateCensus gate_census(const Circuit& c, bool decompose) {
  const Circuit counted = decompose ? decompose_to_basic(c) : c;
  GateCensus census;
  for (const auto& op : counted.ops) {
    if (op.base == Gate::I) continue;
    census.by_name[op.name()] += 1;
    const int span = 1 + static_cast<int>(op.controls.size());
    if (span == 1)
      census.one_qubit += 1;
    else if (span == 2)
      census.two_qubit += 1;
    else
      census.other += 1;
  }
  return census;
}

GateCensus qnpu_census(const Qnpu& q, bool decompose) {
  Circuit configured(q.body.n_qubits + 1);
  const int anc = q.body.n_qubits;
  std::vector<bool> is_cp(q.body.ops.size(), false);
  for (auto i : q.cp_ops) is_cp.at(i) = true;
  for (std::size_t i = 0; i < q.body.ops.size(); ++i) {
    GateOp op = q.body.ops[i];
    if (is_cp[i]) op.controls.push_back(anc);
    configured.push(std::move(op));
  }
  return gate_census(configured, decompose);
}

}  // namespace qpde
