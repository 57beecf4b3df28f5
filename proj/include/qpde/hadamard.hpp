#pragma once

#include <optional>

#include "qpde/qnpu.hpp"
#include "qpde/statevector.hpp"

namespace qpde {

enum class Layout {
  Reversing,       // plain transform; the test itself reverses it
  ExplicitDagger,  // controlled transform plus its explicit inverse
};

/// One objective-term circuit: ansatz, optional register transform, and a
/// processing unit, measured through a single ancilla.
struct TermAssembly {
  Circuit ansatz;  // on the data register
  bool controlled_ansatz = false;
  std::optional<Qnpu> transform;
  Qnpu qnpu;
  Layout layout = Layout::Reversing;
};

/// Exact <sigma_z> of the ancilla after the Hadamard test; equals
/// Re<u| T^dagger [QNPU] T |u> on the data register.
double evaluate_term(const TermAssembly& assembly);

}  // namespace qpde
