#pragma once

#include <optional>

#include "qpde/ansatz.hpp"
#include "qpde/hadamard.hpp"
#include "qpde/problem.hpp"
#include "qpde/qnpu.hpp"

namespace qpde {

struct Control {
  double lambda0 = 0.0;
  std::vector<double> lambda_c;
};

/// Problem data after ghost elimination and time discretization:
///  - dn_active switches the end-coupling correction on for any
///    non-periodic setting;
///  - c_left/c_right are the eliminated-ghost weights multiplying u_1^2 and
///    u_N^2 (1 for Neumann, beta-dependent for Robin, 0 for Dirichlet);
///  - p_eff carries the reaction samples shifted by -1/(zeta dt) so the
///    implicit-Euler system matrix gains +I/dt;
///  - f_eff carries the physical source, the previous-step load y/dt, and
///    the ghost-value source modifications nu*d/dx^2 at the two ends.
struct EffectiveProblem {
  ProblemSpec problem;
  bool dn_active = false;
  double c_left = 0.0;
  double c_right = 0.0;
  std::vector<double> p_eff;
  std::vector<double> f_eff;

  bool has_potential() const;
  bool has_source() const;
};

EffectiveProblem boundary_corrections(const ProblemSpec& problem,
                                      const std::vector<double>* y_prev = nullptr);

/// Circuits encoding the two sample vectors, with their signed scales:
/// gate|0> approximates vector/scale.
struct PreparedGates {
  std::optional<Circuit> source_gate;
  double source_scale = 0.0;
  std::optional<Circuit> potential_gate;
  double potential_scale = 0.0;
};

/// Raw term expectations for one parameter vector, plus the assembled
/// per-family objective contributions once a lambda0 is applied.
struct TermValues {
  double e_laplace = 0.0;   // Re<u|S|u>, S the cyclic shift
  double e_dn = 0.0;        // 2 u_1 u_N
  double e_n = 0.0;         // c_L u_1^2 + c_R u_N^2 (already weighted)
  double e_potential = 0.0; // sum_k p_hat_k |u_k|^2
  double e_source = 0.0;    // Re<f_hat|u>
  bool dn_active = false;
  bool n_active = false;
  bool p_active = false;
  bool s_active = false;
};

struct TermContributions {
  double j_laplace = 0.0;
  double j_dn = 0.0;
  double j_n = 0.0;
  double j_potential = 0.0;
  double j_source = 0.0;
  double total() const { return j_laplace + j_dn + j_n + j_potential + j_source; }
};

/// Quantum-circuit evaluation of the discrete objective and its gradient,
/// one Hadamard-test family per term group.
class VqaObjective {
 public:
  VqaObjective(EffectiveProblem eff, AnsatzConfig ansatz, PreparedGates gates,
               Variant variant = Variant::Deep, bool neumann_via_potential = false,
               double fd_step = 1e-5);

  const EffectiveProblem& effective() const { return eff_; }
  const AnsatzConfig& ansatz_config() const { return ansatz_; }
  int parameter_count() const;

  TermValues evaluate_all_terms(const std::vector<double>& lambda_c) const;
  TermContributions assemble(const Control& control, const TermValues& terms) const;
  double evaluate_objective(const Control& control) const;

  /// d J / d lambda0 from the scaled contributions; lambda0 must be nonzero.
  double grad_lambda0(const Control& control, const TermValues& terms) const;
  /// Shift-rule derivative for the quadratic families plus central
  /// differences for the source overlap.
  std::vector<double> grad_lambda_c(const Control& control) const;

  /// Full gradient (lambda0 first), safe at lambda0 = 0.
  std::vector<double> gradient(const Control& control) const;

  std::vector<cplx> trial_state(const std::vector<double>& lambda_c) const;

 private:
  TermValues evaluate_terms_impl(const std::vector<double>& lambda_c, bool want_quad,
                                 bool want_source) const;
  double quadratic_part(double lambda0, const TermValues& terms) const;
  double linear_part(double lambda0, const TermValues& terms) const;

  EffectiveProblem eff_;
  AnsatzConfig ansatz_;
  PreparedGates gates_;
  Variant variant_;
  bool n_via_potential_;
  double fd_step_;
  bool n_uses_dedicated_ = false;  // both ends share one coefficient
  std::optional<Circuit> n_cast_gate_;
  double n_cast_scale_ = 0.0;
};

/// Classical dense route for the same objective, used by verification:
/// dx * [ l0^2 u^T (A + I/dt) u - 2 l0 u^T f_eff ] with A the
/// boundary-corrected stencil matrix.
double dense_objective(const EffectiveProblem& eff, const Control& control,
                       const std::vector<cplx>& u);

}  // namespace qpde
