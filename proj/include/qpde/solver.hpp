#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qpde/objective.hpp"
#include "qpde/optimizer.hpp"
#include "qpde/stateprep.hpp"

namespace qpde {

struct SolveOptions {
  AnsatzConfig ansatz{2, 1};
  int fit_depth = 1;
  Variant variant = Variant::Deep;
  bool neumann_via_potential = false;
  PsoConfig pso;
  int pso_warm_iterations = -1;  // budget for steps after the first; -1 keeps pso.iterations
  GdConfig gd;
  FitBudget fit;
  std::uint64_t seed = 1;
  double fd_step = 1e-5;
  std::string cache_path;  // fitted-gate cache; empty disables persistence
};

struct StepRecord {
  int step = 0;  // 1-based time index; 1 for steady solves
  Control control;
  std::vector<double> y;  // lambda0 * Re(u_k) on the interior grid
  double objective = 0.0;
  double fit_residual = 0.0;
  int pso_iterations = 0;
  int gd_iterations = 0;
};

/// Encode the effective source/potential vectors as circuits: exact
/// constructions for uniform and end-concentrated shapes, the trial-circuit
/// fit otherwise.
PreparedGates prepare_gates(const EffectiveProblem& eff, const SolveOptions& opt,
                            std::uint64_t seed, FitCache* cache, double* fit_residual);

/// March the optimization over the time grid (single pass for steady
/// problems): each step rebuilds the load vector from the previous
/// solution, refits the source gate, and warm-starts the optimizer from the
/// previous control.
std::vector<StepRecord> time_march(const ProblemSpec& problem, const SolveOptions& opt,
                                   std::ostream* log = nullptr);

}  // namespace qpde
