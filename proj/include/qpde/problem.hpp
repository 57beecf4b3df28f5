#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qpde {

enum class BcType { Periodic, Dirichlet, Neumann, Robin };

/// One side of the domain. Robin holds the discrete relation
/// alpha*u_ghost/dx + beta*du/dx = gamma with a forward first-order
/// difference for the derivative on either side.
struct BcSide {
  BcType type = BcType::Dirichlet;
  double value = 0.0;                      // Dirichlet D or Neumann N
  double alpha = 0.0, beta = 0.0, gamma = 0.0;  // Robin coefficients

  static BcSide periodic() { return {BcType::Periodic, 0.0, 0, 0, 0}; }
  static BcSide dirichlet(double d) { return {BcType::Dirichlet, d, 0, 0, 0}; }
  static BcSide neumann(double n) { return {BcType::Neumann, n, 0, 0, 0}; }
  static BcSide robin(double a, double b, double g) { return {BcType::Robin, 0.0, a, b, g}; }
};

struct BoundarySpec {
  BcSide left;
  BcSide right;

  bool periodic() const { return left.type == BcType::Periodic; }
  void validate() const {
    if ((left.type == BcType::Periodic) != (right.type == BcType::Periodic))
      throw std::invalid_argument("periodic boundaries must be set on both sides or neither");
  }
};

/// Ghost-point elimination u_ghost = c * u_edge + d for one side.
struct GhostRelation {
  double c = 0.0;
  double d = 0.0;
};

GhostRelation ghost_left(const BcSide& side, double dx);
GhostRelation ghost_right(const BcSide& side, double dx);

struct ProblemSpec {
  double nu = 1.0;    // diffusivity
  double zeta = 1.0;  // reaction coefficient
  int n_qubits = 2;   // N_p = 2^n interior points
  std::vector<double> potential;  // samples p_k, may be empty for zero
  std::vector<double> source;     // samples f_k, may be empty for zero
  BoundarySpec boundary;
  // transient part; dt <= 0 means steady
  double dt = 0.0;
  int n_steps = 0;
  std::vector<double> initial;  // y(x_k, 0), empty for zero

  int n_points() const { return 1 << n_qubits; }
  double dx() const { return 1.0 / (n_points() + 1); }
  bool transient() const { return dt > 0.0; }
  double x_of(int k) const { return dx() * (k + 1); }  // interior index 0-based

  void validate() const;
  std::vector<double> potential_samples() const;
  std::vector<double> source_samples() const;
  std::vector<double> initial_samples() const;
};

/// Whether the boundary-corrected operator has the constant vector in its
/// null space (periodic, or derivative conditions on both sides).
bool singular_operator(const ProblemSpec& p);

}  // namespace qpde
