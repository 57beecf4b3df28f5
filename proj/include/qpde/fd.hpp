#pragma once

#include <vector>

#include "qpde/problem.hpp"

namespace qpde {

/// Dense boundary-corrected stencil matrix (nu/dx^2 scaling included):
/// row k of A y = f_eff is the eliminated-ghost second-difference at x_k.
std::vector<std::vector<double>> stencil_matrix(const ProblemSpec& p);

/// Right-hand-side modifications induced by the eliminated ghost values
/// (zero for periodic and homogeneous derivative conditions).
std::vector<double> boundary_rhs(const ProblemSpec& p);

/// Steady reference solution on the interior grid. Singular systems
/// (periodic, pure derivative conditions) are anchored by pinning the mean
/// of the two central points to zero.
std::vector<double> fd_solve_steady(const ProblemSpec& p);

/// One implicit-Euler step: (I/dt + A) y = y_prev/dt + f_eff.
std::vector<double> fd_step_transient(const ProblemSpec& p, const std::vector<double>& y_prev);

/// Subtract the anchor offset (mean of the two central points) when the
/// operator is singular; identity otherwise.
std::vector<double> anchor(const ProblemSpec& p, std::vector<double> y);

/// Boundary values y_0 and y_{N+1} reconstructed from the ghost relations,
/// for reporting alongside the interior solution.
std::pair<double, double> boundary_values(const ProblemSpec& p, const std::vector<double>& y);

}  // namespace qpde
