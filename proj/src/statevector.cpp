#include "qpde/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpde {

namespace {
constexpr cplx kI{0.0, 1.0};

void check_disjoint(const GateOp& op, int n_qubits) {
  if (op.target < 0 || op.target >= n_qubits)
    throw std::out_of_range("gate target out of range");
  for (int c : op.controls) {
    if (c < 0 || c >= n_qubits) throw std::out_of_range("gate control out of range");
    if (c == op.target) throw std::invalid_argument("gate control overlaps target");
  }
  for (std::size_t i = 0; i < op.controls.size(); ++i)
    for (std::size_t j = i + 1; j < op.controls.size(); ++j)
      if (op.controls[i] == op.controls[j])
        throw std::invalid_argument("duplicate control qubit");
}
}  // namespace

GateKind GateOp::kind() const {
  const std::size_t nc = controls.size();
  if (nc == 0) {
    switch (base) {
      case Gate::I: return GateKind::I;
      case Gate::X: return GateKind::X;
      case Gate::Y: return GateKind::Y;
      case Gate::Z: return GateKind::Z;
      case Gate::H: return GateKind::H;
      case Gate::Ry: return GateKind::Ry;
      case Gate::Rz: return GateKind::Rz;
      case Gate::Phase: return GateKind::Phase;
    }
  }
  if (base == Gate::X) {
    if (nc == 1) return GateKind::CNOT;
    if (nc == 2) return GateKind::Toffoli;
    return GateKind::MultiControlledX;
  }
  if (base == Gate::Z) {
    if (nc == 1) return GateKind::CZ;
    return GateKind::MultiControlledZ;
  }
  return GateKind::ControlledGeneric;
}

std::string GateOp::name() const {
  switch (kind()) {
    case GateKind::I: return "I";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::Phase: return "P";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::MultiControlledX: return "MCX";
    case GateKind::MultiControlledZ: return "MCZ";
    case GateKind::ControlledGeneric: return "C-" + GateOp{base, angle, target, {}}.name();
  }
  return "?";
}

GateOp GateOp::inverse() const {
  GateOp inv = *this;
  switch (base) {
    case Gate::Ry:
    case Gate::Rz:
    case Gate::Phase:
      inv.angle = -angle;
      break;
    default:
      break;  // self-inverse
  }
  return inv;
}

void Circuit::push(GateOp op) {
  check_disjoint(op, n_qubits);
  ops.push_back(std::move(op));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits)
    throw std::invalid_argument("appended circuit wider than host");
  for (const auto& op : other.ops) push(op);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits);
  inv.ops.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) inv.ops.push_back(it->inverse());
  return inv;
}

Circuit Circuit::controlled_on(int q) const {
  Circuit out(std::max(n_qubits, q + 1));
  out.ops.reserve(ops.size());
  for (const auto& op : ops) {
    GateOp c = op;
    c.controls.push_back(q);
    out.push(std::move(c));
  }
  return out;
}

Circuit Circuit::shifted(int offset, int new_width) const {
  Circuit out(new_width);
  out.ops.reserve(ops.size());
  for (const auto& op : ops) {
    GateOp s = op;
    s.target += offset;
    for (int& c : s.controls) c += offset;
    out.push(std::move(s));
  }
  return out;
}

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::dagger() const {
  CMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("matrix size mismatch");
  CMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const cplx v = (*this)(r, k);
      if (v == cplx{}) continue;
      for (int c = 0; c < n; ++c) m(r, c) += v * rhs(k, c);
    }
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("matrix size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - rhs.a[i]));
  return d;
}

CMatrix gate_matrix(GateKind kind, double angle) {
  switch (kind) {
    case GateKind::I: {
      return CMatrix::identity(2);
    }
    case GateKind::X: {
      CMatrix m(2);
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m;
    }
    case GateKind::Y: {
      CMatrix m(2);
      m(0, 1) = -kI;
      m(1, 0) = kI;
      return m;
    }
    case GateKind::Z: {
      CMatrix m(2);
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      return m;
    }
    case GateKind::H: {
      CMatrix m(2);
      const double s = 1.0 / std::sqrt(2.0);
      m(0, 0) = s;
      m(0, 1) = s;
      m(1, 0) = s;
      m(1, 1) = -s;
      return m;
    }
    case GateKind::Ry: {
      CMatrix m(2);
      m(0, 0) = std::cos(angle / 2);
      m(0, 1) = -std::sin(angle / 2);
      m(1, 0) = std::sin(angle / 2);
      m(1, 1) = std::cos(angle / 2);
      return m;
    }
    case GateKind::Rz: {
      CMatrix m(2);
      m(0, 0) = std::exp(-kI * (angle / 2));
      m(1, 1) = std::exp(kI * (angle / 2));
      return m;
    }
    case GateKind::Phase: {
      CMatrix m(2);
      m(0, 0) = 1.0;
      m(1, 1) = std::exp(kI * angle);
      return m;
    }
    // Two-qubit kinds in little-endian convention: qubit 0 is the control
    // and the least significant bit of the basis index.
    case GateKind::CNOT: {
      CMatrix m(4);
      m(0, 0) = 1.0;
      m(1, 3) = 1.0;
      m(2, 2) = 1.0;
      m(3, 1) = 1.0;
      return m;
    }
    case GateKind::CZ: {
      CMatrix m = CMatrix::identity(4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::Toffoli: {
      CMatrix m = CMatrix::identity(8);
      m(3, 3) = 0.0;
      m(7, 7) = 0.0;
      m(3, 7) = 1.0;
      m(7, 3) = 1.0;
      return m;
    }
    default:
      throw std::invalid_argument("gate_matrix: unsupported kind");
  }
}

Statevector::Statevector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 26) throw std::invalid_argument("bad qubit count");
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

void Statevector::reset() {
  std::fill(amps_.begin(), amps_.end(), cplx{});
  amps_[0] = 1.0;
}

void Statevector::set_amplitudes(std::vector<cplx> amps) {
  if (amps.size() != amps_.size()) throw std::invalid_argument("amplitude length mismatch");
  amps_ = std::move(amps);
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::runtime_error("cannot normalize zero state");
  for (auto& a : amps_) a /= nrm;
}

void Statevector::apply(const GateOp& op) {
  check_disjoint(op, n_);
  std::size_t cmask = 0;
  for (int c : op.controls) cmask |= std::size_t{1} << c;
  const std::size_t tmask = std::size_t{1} << op.target;
  const std::size_t dim = amps_.size();

  switch (op.base) {
    case Gate::I:
      return;
    case Gate::X: {
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
      return;
    }
    case Gate::Y: {
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && !(i & tmask)) {
          const cplx a0 = amps_[i], a1 = amps_[i | tmask];
          amps_[i] = -kI * a1;
          amps_[i | tmask] = kI * a0;
        }
      return;
    }
    case Gate::Z: {
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && (i & tmask)) amps_[i] = -amps_[i];
      return;
    }
    case Gate::Phase: {
      const cplx ph = std::exp(kI * op.angle);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && (i & tmask)) amps_[i] *= ph;
      return;
    }
    case Gate::Rz: {
      const cplx p0 = std::exp(-kI * (op.angle / 2));
      const cplx p1 = std::exp(kI * (op.angle / 2));
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask) amps_[i] *= (i & tmask) ? p1 : p0;
      return;
    }
    case Gate::H: {
      const double s = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && !(i & tmask)) {
          const cplx a0 = amps_[i], a1 = amps_[i | tmask];
          amps_[i] = s * (a0 + a1);
          amps_[i | tmask] = s * (a0 - a1);
        }
      return;
    }
    case Gate::Ry: {
      const double c = std::cos(op.angle / 2), s = std::sin(op.angle / 2);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && !(i & tmask)) {
          const cplx a0 = amps_[i], a1 = amps_[i | tmask];
          amps_[i] = c * a0 - s * a1;
          amps_[i | tmask] = s * a0 + c * a1;
        }
      return;
    }
  }
}

void Statevector::apply(const Circuit& c) {
  if (c.n_qubits > n_) throw std::invalid_argument("circuit wider than state");
  for (const auto& op : c.ops) apply(op);
}

double Statevector::sigma_z_expectation(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit out of range");
  const std::size_t mask = std::size_t{1} << qubit;
  double e = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    e += (i & mask) ? -p : p;
  }
  return e;
}

CMatrix circuit_to_matrix(const Circuit& c, int max_qubits) {
  if (c.n_qubits > max_qubits)
    throw std::invalid_argument("circuit_to_matrix: qubit cap exceeded");
  const int dim = 1 << c.n_qubits;
  CMatrix m(dim);
  Statevector sv(c.n_qubits);
  for (int col = 0; col < dim; ++col) {
    std::vector<cplx> basis(dim, cplx{});
    basis[static_cast<std::size_t>(col)] = 1.0;
    sv.set_amplitudes(std::move(basis));
    sv.apply(c);
    for (int row = 0; row < dim; ++row) m(row, col) = sv[static_cast<std::size_t>(row)];
  }
  return m;
}

}  // namespace qpde
