#include "qpde/objective.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qpde/fd.hpp"
#include "qpde/stateprep.hpp"

namespace qpde {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;

bool any_nonzero(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0) return true;
  return false;
}
}  // namespace

bool EffectiveProblem::has_potential() const { return any_nonzero(p_eff); }
bool EffectiveProblem::has_source() const { return any_nonzero(f_eff); }

EffectiveProblem boundary_corrections(const ProblemSpec& problem,
                                      const std::vector<double>* y_prev) {
  problem.validate();
  EffectiveProblem eff;
  eff.problem = problem;
  const int n = problem.n_points();
  const double dx = problem.dx();

  eff.p_eff = problem.potential_samples();
  eff.f_eff = problem.source_samples();
  if (problem.transient()) {
    if (problem.zeta == 0.0)
      throw std::invalid_argument("transient problems need a nonzero reaction coefficient");
    const double shift = -1.0 / (problem.zeta * problem.dt);
    for (double& p : eff.p_eff) p += shift;
    const std::vector<double> prev = y_prev ? *y_prev : problem.initial_samples();
    if (static_cast<int>(prev.size()) != n)
      throw std::invalid_argument("previous-step length mismatch");
    for (int k = 0; k < n; ++k) eff.f_eff[k] += prev[k] / problem.dt;
  }

  if (!problem.boundary.periodic()) {
    eff.dn_active = true;
    const auto gl = ghost_left(problem.boundary.left, dx);
    const auto gr = ghost_right(problem.boundary.right, dx);
    eff.c_left = gl.c;
    eff.c_right = gr.c;
    const double scale = problem.nu / (dx * dx);
    eff.f_eff[0] += scale * gl.d;
    eff.f_eff[n - 1] += scale * gr.d;
  }
  return eff;
}

VqaObjective::VqaObjective(EffectiveProblem eff, AnsatzConfig ansatz, PreparedGates gates,
                           Variant variant, bool neumann_via_potential, double fd_step)
    : eff_(std::move(eff)),
      ansatz_(ansatz),
      gates_(std::move(gates)),
      variant_(variant),
      n_via_potential_(neumann_via_potential),
      fd_step_(fd_step) {
  if (ansatz_.n_qubits != eff_.problem.n_qubits)
    throw std::invalid_argument("ansatz width must match the register");
  const bool n_active = eff_.c_left != 0.0 || eff_.c_right != 0.0;
  if (n_active) {
    n_uses_dedicated_ = !n_via_potential_ && eff_.c_left == eff_.c_right;
    if (!n_uses_dedicated_) {
      n_cast_gate_ = endpoint_state_gate(ansatz_.n_qubits, eff_.c_left, eff_.c_right);
      n_cast_scale_ = std::hypot(eff_.c_left, eff_.c_right);
    }
  }
  if (eff_.has_potential() && !gates_.potential_gate)
    throw std::invalid_argument("potential term requires an encoded gate");
  if (eff_.has_source() && !gates_.source_gate)
    throw std::invalid_argument("source term requires an encoded gate");
}

int VqaObjective::parameter_count() const { return qpde::parameter_count(ansatz_); }

TermValues VqaObjective::evaluate_all_terms(const std::vector<double>& lambda_c) const {
  return evaluate_terms_impl(lambda_c, true, true);
}

TermValues VqaObjective::evaluate_terms_impl(const std::vector<double>& lambda_c, bool want_quad,
                                             bool want_source) const {
  const int n = ansatz_.n_qubits;
  const Circuit ansatz = build_ansatz(ansatz_, lambda_c);
  TermValues t;

  if (want_quad) {
    TermAssembly a;
    a.ansatz = ansatz;
    a.qnpu = laplace_qnpu(n);
    t.e_laplace = evaluate_term(a);
  }
  if (want_quad && eff_.dn_active) {
    t.dn_active = true;
    TermAssembly a;
    a.ansatz = ansatz;
    a.transform = transform_tt(n, variant_);
    a.qnpu = boundary_dn_qnpu(n, variant_);
    a.layout = variant_ == Variant::Deep ? Layout::Reversing : Layout::ExplicitDagger;
    t.e_dn = evaluate_term(a);
  }
  if (want_quad && (eff_.c_left != 0.0 || eff_.c_right != 0.0)) {
    t.n_active = true;
    if (n_uses_dedicated_) {
      TermAssembly a;
      a.ansatz = ansatz;
      a.transform = transform_tt(n, variant_);
      a.qnpu = boundary_n_qnpu(n, variant_);
      a.layout = variant_ == Variant::Deep ? Layout::Reversing : Layout::ExplicitDagger;
      t.e_n = eff_.c_left * evaluate_term(a);
    } else {
      TermAssembly a;
      a.ansatz = ansatz;
      a.qnpu = potential_qnpu(n, *n_cast_gate_);
      t.e_n = n_cast_scale_ * evaluate_term(a);
    }
  }
  if (want_quad && eff_.has_potential()) {
    t.p_active = true;
    TermAssembly a;
    a.ansatz = ansatz;
    a.qnpu = potential_qnpu(n, *gates_.potential_gate);
    t.e_potential = evaluate_term(a);
  }
  if (want_source && eff_.has_source()) {
    t.s_active = true;
    TermAssembly a;
    a.ansatz = ansatz;
    a.controlled_ansatz = true;
    a.qnpu = source_qnpu(n, *gates_.source_gate);
    t.e_source = evaluate_term(a);
  }
  return t;
}

TermContributions VqaObjective::assemble(const Control& control, const TermValues& t) const {
  const double dx = eff_.problem.dx();
  const double kappa = eff_.problem.nu * control.lambda0 * control.lambda0 / (dx * dx);
  TermContributions c;
  c.j_laplace = -kappa * (2.0 * t.e_laplace - 2.0) * dx;
  if (t.dn_active) c.j_dn = kappa * t.e_dn * dx;
  if (t.n_active) c.j_n = -kappa * t.e_n * dx;
  if (t.p_active)
    c.j_potential = -eff_.problem.zeta * control.lambda0 * control.lambda0 *
                    gates_.potential_scale * t.e_potential * dx;
  if (t.s_active)
    c.j_source = -2.0 * control.lambda0 * gates_.source_scale * t.e_source * dx;
  return c;
}

double VqaObjective::quadratic_part(double, const TermValues& t) const {
  Control unit{1.0, {}};
  const auto c = assemble(unit, t);
  return c.j_laplace + c.j_dn + c.j_n + c.j_potential;
}

double VqaObjective::linear_part(double, const TermValues& t) const {
  Control unit{1.0, {}};
  return assemble(unit, t).j_source;
}

double VqaObjective::evaluate_objective(const Control& control) const {
  if (static_cast<int>(control.lambda_c.size()) != parameter_count())
    throw std::invalid_argument("parameter vector length mismatch");
  const auto t = evaluate_all_terms(control.lambda_c);
  return assemble(control, t).total();
}

double VqaObjective::grad_lambda0(const Control& control, const TermValues& t) const {
  if (control.lambda0 == 0.0)
    throw std::domain_error("lambda0 gradient undefined at zero; re-seed the control");
  const auto c = assemble(control, t);
  return (2.0 * (c.j_laplace + c.j_potential + c.j_dn + c.j_n) + c.j_source) / control.lambda0;
}

std::vector<double> VqaObjective::grad_lambda_c(const Control& control) const {
  const int dim = parameter_count();
  if (static_cast<int>(control.lambda_c.size()) != dim)
    throw std::invalid_argument("parameter vector length mismatch");
  const double l0 = control.lambda0;
  const double l0sq = l0 * l0;
  std::vector<double> grad(dim, 0.0);
  std::vector<double> shifted = control.lambda_c;
  for (int i = 0; i < dim; ++i) {
    shifted[i] = control.lambda_c[i] + kHalfPi;
    const auto plus = evaluate_terms_impl(shifted, true, false);
    shifted[i] = control.lambda_c[i] - kHalfPi;
    const auto minus = evaluate_terms_impl(shifted, true, false);
    shifted[i] = control.lambda_c[i] + fd_step_;
    const auto src_plus = evaluate_terms_impl(shifted, false, true);
    shifted[i] = control.lambda_c[i] - fd_step_;
    const auto src_minus = evaluate_terms_impl(shifted, false, true);
    shifted[i] = control.lambda_c[i];

    const double quad = 0.5 * l0sq * (quadratic_part(1.0, plus) - quadratic_part(1.0, minus));
    const double lin =
        l0 * (linear_part(1.0, src_plus) - linear_part(1.0, src_minus)) / (2.0 * fd_step_);
    grad[i] = quad + lin;
  }
  return grad;
}

std::vector<double> VqaObjective::gradient(const Control& control) const {
  const auto t = evaluate_all_terms(control.lambda_c);
  const double q = quadratic_part(1.0, t);
  const double lin = linear_part(1.0, t);
  std::vector<double> g;
  g.reserve(1 + control.lambda_c.size());
  g.push_back(2.0 * control.lambda0 * q + lin);
  const auto gc = grad_lambda_c(control);
  g.insert(g.end(), gc.begin(), gc.end());
  return g;
}

std::vector<cplx> VqaObjective::trial_state(const std::vector<double>& lambda_c) const {
  return ansatz_state(ansatz_, lambda_c).amplitudes();
}

double dense_objective(const EffectiveProblem& eff, const Control& control,
                       const std::vector<cplx>& u) {
  const auto a = stencil_matrix(eff.problem);
  const int n = eff.problem.n_points();
  const double dx = eff.problem.dx();
  const double inv_dt = eff.problem.transient() ? 1.0 / eff.problem.dt : 0.0;
  double quad = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double m = a[r][c];
      if (r == c) m += inv_dt;
      quad += m * std::real(std::conj(u[r]) * u[c]);
    }
  double lin = 0.0;
  for (int k = 0; k < n; ++k) lin += eff.f_eff[k] * std::real(u[k]);
  const double l0 = control.lambda0;
  return dx * (l0 * l0 * quad - 2.0 * l0 * lin);
}

}  // namespace qpde
