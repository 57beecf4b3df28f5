#pragma once

#include <functional>
#include <iosfwd>
#include <random>
#include <vector>

namespace qpde {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct PsoConfig {
  int particles = 100;
  int iterations = 1000;
  double inertia = 0.7;
  double cognitive = 1.5;
  double social = 1.5;
  double tolerance = 1e-7;   // on the change of the gradient norm, when available
  int check_interval = 25;   // gradient-change checks are rationed to every k-th sweep
};

struct GdConfig {
  double step = 0.5;
  int iterations = 5000;
  double tolerance = 1e-7;  // |grad_i - grad_{i-1}|_2 stopping level
};

struct OptResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Global-best particle swarm over box-initialized coordinates. `lo`/`hi`
/// bound the initialization (and the velocity scale), not the search. When
/// `seed_point` is given one particle starts from it.
OptResult pso_minimize(const ObjectiveFn& objective, const std::vector<double>& lo,
                       const std::vector<double>& hi, const PsoConfig& cfg, std::mt19937_64& rng,
                       const std::vector<double>* seed_point = nullptr,
                       const GradientFn* gradient = nullptr, std::ostream* log = nullptr);

/// Gradient descent with Armijo backtracking; stops when the gradient stops
/// changing (two-norm of successive gradient differences below tolerance).
/// Throws after 50 consecutive non-improving iterations.
OptResult gd_minimize(const ObjectiveFn& objective, const GradientFn& gradient,
                      std::vector<double> start, const GdConfig& cfg,
                      std::ostream* log = nullptr);

}  // namespace qpde
