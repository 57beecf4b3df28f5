#include "qpde/problem.hpp"

namespace qpde {

GhostRelation ghost_left(const BcSide& side, double dx) {
  switch (side.type) {
    case BcType::Periodic:
      throw std::logic_error("periodic side has no ghost relation");
    case BcType::Dirichlet:
      return {0.0, side.value};
    case BcType::Neumann:
      // N ~ (u_1 - u_0)/dx
      return {1.0, -side.value * dx};
    case BcType::Robin: {
      // alpha u_0/dx + beta (u_1 - u_0)/dx = gamma
      const double denom = side.alpha - side.beta;
      if (denom == 0.0) throw std::invalid_argument("degenerate Robin coefficients");
      return {-side.beta / denom, side.gamma * dx / denom};
    }
  }
  return {};
}

GhostRelation ghost_right(const BcSide& side, double dx) {
  switch (side.type) {
    case BcType::Periodic:
      throw std::logic_error("periodic side has no ghost relation");
    case BcType::Dirichlet:
      return {0.0, side.value};
    case BcType::Neumann:
      // right-side convention: u_{N+1} = u_N - N dx
      return {1.0, -side.value * dx};
    case BcType::Robin: {
      // alpha u_{N+1}/dx + beta (u_{N+1} - u_N)/dx = gamma
      const double denom = side.alpha + side.beta;
      if (denom == 0.0) throw std::invalid_argument("degenerate Robin coefficients");
      return {side.beta / denom, side.gamma * dx / denom};
    }
  }
  return {};
}

void ProblemSpec::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("need at least one register qubit");
  if (nu <= 0.0) throw std::invalid_argument("diffusivity must be positive");
  boundary.validate();
  const auto check_len = [&](const std::vector<double>& v, const char* what) {
    if (!v.empty() && static_cast<int>(v.size()) != n_points())
      throw std::invalid_argument(std::string(what) + " sample count must equal the grid size");
  };
  check_len(potential, "potential");
  check_len(source, "source");
  check_len(initial, "initial");
  if (transient() && n_steps < 1)
    throw std::invalid_argument("transient problems need at least one step");
  if (!transient() && n_steps > 1)
    throw std::invalid_argument("steady problems take a single solve");
}

std::vector<double> ProblemSpec::potential_samples() const {
  if (!potential.empty()) return potential;
  return std::vector<double>(n_points(), 0.0);
}

std::vector<double> ProblemSpec::source_samples() const {
  if (!source.empty()) return source;
  return std::vector<double>(n_points(), 0.0);
}

std::vector<double> ProblemSpec::initial_samples() const {
  if (!initial.empty()) return initial;
  return std::vector<double>(n_points(), 0.0);
}

bool singular_operator(const ProblemSpec& p) {
  if (p.transient()) return false;  // the 1/dt shift regularizes
  bool has_potential = false;
  for (double v : p.potential_samples())
    if (v != 0.0) has_potential = true;
  if (has_potential) return false;
  if (p.boundary.periodic()) return true;
  const auto gl = ghost_left(p.boundary.left, p.dx());
  const auto gr = ghost_right(p.boundary.right, p.dx());
  return gl.c == 1.0 && gr.c == 1.0;
}

}  // namespace qpde
