#include "qpde/solver.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qpde {

namespace {

/// Recognize vectors the solver can encode without a fit.
struct ExactShape {
  enum class Kind { None, Uniform, Endpoints } kind = Kind::None;
  double scale = 0.0;
  double left = 0.0, right = 0.0;
};

ExactShape classify(const std::vector<double>& v) {
  const std::size_t n = v.size();
  bool uniform = true;
  for (double x : v)
    if (x != v[0]) uniform = false;
  if (uniform && v[0] != 0.0) {
    ExactShape s;
    s.kind = ExactShape::Kind::Uniform;
    s.scale = v[0] * std::sqrt(static_cast<double>(n));
    return s;
  }
  bool endpoints_only = true;
  for (std::size_t k = 1; k + 1 < n; ++k)
    if (v[k] != 0.0) endpoints_only = false;
  if (endpoints_only && (v[0] != 0.0 || v[n - 1] != 0.0)) {
    ExactShape s;
    s.kind = ExactShape::Kind::Endpoints;
    s.scale = std::hypot(v[0], v[n - 1]);
    s.left = v[0];
    s.right = v[n - 1];
    return s;
  }
  return {};
}

struct EncodedVector {
  Circuit gate;
  double scale = 0.0;
  double residual = 0.0;
};

EncodedVector encode_vector(const std::vector<double>& v, int n_qubits, const SolveOptions& opt,
                            std::uint64_t seed, FitCache* cache) {
  const auto shape = classify(v);
  if (shape.kind == ExactShape::Kind::Uniform)
    return {uniform_state_gate(n_qubits), shape.scale, 0.0};
  if (shape.kind == ExactShape::Kind::Endpoints)
    return {endpoint_state_gate(n_qubits, shape.left, shape.right), shape.scale, 0.0};

  const auto fit = fit_function_gate(v, {n_qubits, opt.fit_depth}, opt.fit, seed, cache);
  if (!fit.converged)
    throw std::runtime_error("state preparation did not reach the fit threshold");
  double norm = 0.0;
  for (double x : v) norm += x * x;
  return {fit.gate, std::sqrt(norm), fit.residual};
}

}  // namespace

PreparedGates prepare_gates(const EffectiveProblem& eff, const SolveOptions& opt,
                            std::uint64_t seed, FitCache* cache, double* fit_residual) {
  PreparedGates gates;
  double residual = 0.0;
  const int n = eff.problem.n_qubits;
  if (eff.has_source()) {
    auto enc = encode_vector(eff.f_eff, n, opt, seed, cache);
    gates.source_gate = std::move(enc.gate);
    gates.source_scale = enc.scale;
    residual = std::max(residual, enc.residual);
  }
  if (eff.has_potential()) {
    auto enc = encode_vector(eff.p_eff, n, opt, seed + 0x9e3779b9u, cache);
    gates.potential_gate = std::move(enc.gate);
    gates.potential_scale = enc.scale;
    residual = std::max(residual, enc.residual);
  }
  if (fit_residual) *fit_residual = residual;
  return gates;
}

std::vector<StepRecord> time_march(const ProblemSpec& problem, const SolveOptions& opt,
                                   std::ostream* log) {
  problem.validate();
  const int steps = problem.transient() ? problem.n_steps : 1;
  const int n_params = parameter_count(opt.ansatz);

  std::unique_ptr<FitCache> cache;
  if (!opt.cache_path.empty()) cache = std::make_unique<FitCache>(opt.cache_path);

  std::mt19937_64 rng(opt.seed);
  std::vector<double> y_prev = problem.initial_samples();
  std::vector<StepRecord> records;
  Control warm;
  bool have_warm = false;

  for (int step = 1; step <= steps; ++step) {
    const auto eff =
        boundary_corrections(problem, problem.transient() ? &y_prev : nullptr);
    double fit_residual = 0.0;
    PreparedGates gates;
    try {
      gates = prepare_gates(eff, opt, opt.seed + static_cast<std::uint64_t>(step),
                            cache.get(), &fit_residual);
    } catch (const std::exception& e) {
      throw std::runtime_error("state preparation failed at step " + std::to_string(step) +
                               ": " + e.what());
    }
    const VqaObjective objective(eff, opt.ansatz, gates, opt.variant,
                                 opt.neumann_via_potential, opt.fd_step);

    const ObjectiveFn flat = [&](const std::vector<double>& x) {
      Control c{x[0], std::vector<double>(x.begin() + 1, x.end())};
      return objective.evaluate_objective(c);
    };
    const GradientFn flat_grad = [&](const std::vector<double>& x) {
      Control c{x[0], std::vector<double>(x.begin() + 1, x.end())};
      return objective.gradient(c);
    };

    std::vector<double> lo(1 + n_params, 0.0), hi(1 + n_params, 4 * std::numbers::pi);
    hi[0] = 1.0;

    PsoConfig pso = opt.pso;
    std::vector<double> seed_point;
    const std::vector<double>* seed_ptr = nullptr;
    if (have_warm) {
      seed_point.push_back(warm.lambda0);
      seed_point.insert(seed_point.end(), warm.lambda_c.begin(), warm.lambda_c.end());
      seed_ptr = &seed_point;
      if (opt.pso_warm_iterations >= 0) pso.iterations = opt.pso_warm_iterations;
    }

    const auto swarm = pso_minimize(flat, lo, hi, pso, rng, seed_ptr, &flat_grad, log);
    const auto refined = gd_minimize(flat, flat_grad, swarm.x, opt.gd, log);

    StepRecord rec;
    rec.step = step;
    rec.control = Control{refined.x[0],
                          std::vector<double>(refined.x.begin() + 1, refined.x.end())};
    rec.objective = refined.value;
    rec.fit_residual = fit_residual;
    rec.pso_iterations = swarm.iterations;
    rec.gd_iterations = refined.iterations;

    const auto u = objective.trial_state(rec.control.lambda_c);
    rec.y.resize(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
      rec.y[k] = rec.control.lambda0 * std::real(u[k]);

    if (log)
      *log << "step index=" << step << " j=" << rec.objective
           << " lambda0=" << rec.control.lambda0 << " pso_iters=" << rec.pso_iterations
           << " gd_iters=" << rec.gd_iterations << "\n";

    warm = rec.control;
    have_warm = true;
    y_prev = rec.y;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace qpde
