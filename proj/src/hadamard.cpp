#include "qpde/hadamard.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpde {

namespace {

void apply_qnpu(Statevector& sv, const Qnpu& q, int ancilla, bool with_cp) {
  std::vector<bool> is_cp(q.body.ops.size(), false);
  for (auto i : q.cp_ops) is_cp.at(i) = true;
  for (std::size_t i = 0; i < q.body.ops.size(); ++i) {
    GateOp op = q.body.ops[i];
    if (with_cp && is_cp[i]) op.controls.push_back(ancilla);
    sv.apply(op);
  }
}

}  // namespace

double evaluate_term(const TermAssembly& assembly) {
  const int n_data = assembly.qnpu.n_data;
  if (assembly.ansatz.n_qubits != n_data)
    throw std::invalid_argument("ansatz width does not match the processing unit");
  int extra = assembly.qnpu.body.n_qubits - n_data;
  if (assembly.transform) {
    if (assembly.transform->n_data != n_data)
      throw std::invalid_argument("transform width does not match the processing unit");
    extra = std::max(extra, assembly.transform->body.n_qubits - n_data);
  }
  const int total = n_data + extra + 1;
  const int anc = total - 1;

  Statevector sv(total);
  sv.apply(GateOp::h(anc));
  if (assembly.controlled_ansatz)
    sv.apply(assembly.ansatz.controlled_on(anc));
  else
    sv.apply(assembly.ansatz);
  if (assembly.transform) {
    const bool controlled = assembly.layout == Layout::ExplicitDagger;
    apply_qnpu(sv, *assembly.transform, anc, controlled);
    apply_qnpu(sv, assembly.qnpu, anc, true);
    if (controlled) apply_qnpu(sv, assembly.transform->inverted(), anc, true);
  } else {
    apply_qnpu(sv, assembly.qnpu, anc, true);
  }
  sv.apply(GateOp::h(anc));
  return sv.sigma_z_expectation(anc);
}

}  // namespace qpde
