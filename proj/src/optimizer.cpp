#include "qpde/optimizer.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qpde {

namespace {

double grad_change(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

OptResult pso_minimize(const ObjectiveFn& objective, const std::vector<double>& lo,
                       const std::vector<double>& hi, const PsoConfig& cfg, std::mt19937_64& rng,
                       const std::vector<double>* seed_point, const GradientFn* gradient,
                       std::ostream* log) {
  const int dim = static_cast<int>(lo.size());
  if (hi.size() != lo.size()) throw std::invalid_argument("bound length mismatch");
  if (cfg.particles < 1) throw std::invalid_argument("need at least one particle");

  struct Particle {
    std::vector<double> x, v, best_x;
    double best_value;
  };
  std::vector<Particle> swarm(cfg.particles);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> gbest;
  double gbest_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.particles; ++i) {
    auto& p = swarm[i];
    p.x.resize(dim);
    p.v.resize(dim);
    for (int d = 0; d < dim; ++d) {
      const double span = hi[d] - lo[d];
      p.x[d] = lo[d] + span * unit(rng);
      p.v[d] = span * (unit(rng) - 0.5) * 0.2;
    }
    if (i == 0 && seed_point) p.x = *seed_point;
    p.best_x = p.x;
    p.best_value = objective(p.x);
    if (p.best_value < gbest_value) {
      gbest_value = p.best_value;
      gbest = p.x;
    }
  }

  std::vector<double> prev_grad;
  int iter = 0;
  bool converged = false;
  for (; iter < cfg.iterations; ++iter) {
    for (auto& p : swarm) {
      for (int d = 0; d < dim; ++d) {
        const double r1 = unit(rng), r2 = unit(rng);
        p.v[d] = cfg.inertia * p.v[d] + cfg.cognitive * r1 * (p.best_x[d] - p.x[d]) +
                 cfg.social * r2 * (gbest[d] - p.x[d]);
        p.x[d] += p.v[d];
      }
      const double value = objective(p.x);
      if (value < p.best_value) {
        p.best_value = value;
        p.best_x = p.x;
      }
      if (value < gbest_value) {
        gbest_value = value;
        gbest = p.x;
      }
    }
    if (gradient && cfg.check_interval > 0 && (iter + 1) % cfg.check_interval == 0) {
      auto g = (*gradient)(gbest);
      if (!prev_grad.empty()) {
        const double ch = grad_change(g, prev_grad);
        if (log)
          *log << "opt stage=pso iter=" << iter + 1 << " best_j=" << gbest_value
               << " ch_grad=" << ch << "\n";
        if (ch <= cfg.tolerance) {
          converged = true;
          ++iter;
          break;
        }
      } else if (log) {
        *log << "opt stage=pso iter=" << iter + 1 << " best_j=" << gbest_value << "\n";
      }
      prev_grad = std::move(g);
    }
  }
  return {gbest, gbest_value, iter, converged};
}

OptResult gd_minimize(const ObjectiveFn& objective, const GradientFn& gradient,
                      std::vector<double> start, const GdConfig& cfg, std::ostream* log) {
  std::vector<double> x = std::move(start);
  double value = objective(x);
  std::vector<double> prev_grad;
  int stalls = 0;
  int iter = 0;
  for (; iter < cfg.iterations; ++iter) {
    auto g = gradient(x);
    if (!prev_grad.empty() && grad_change(g, prev_grad) <= cfg.tolerance) {
      if (log)
        *log << "opt stage=gd iter=" << iter << " j=" << value
             << " ch_grad=" << grad_change(g, prev_grad) << " converged=1\n";
      return {x, value, iter, true};
    }
    double g2 = 0.0;
    for (double v : g) g2 += v * v;
    if (g2 == 0.0) return {x, value, iter, true};

    double step = cfg.step;
    bool improved = false;
    std::vector<double> trial(x.size());
    for (int shrink = 0; shrink < 40; ++shrink) {
      for (std::size_t d = 0; d < x.size(); ++d) trial[d] = x[d] - step * g[d];
      const double trial_value = objective(trial);
      if (trial_value <= value - 1e-4 * step * g2) {
        x = trial;
        value = trial_value;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) {
      if (++stalls >= 50)
        throw std::runtime_error("gradient descent diverged: no improvement in 50 iterations");
    } else {
      stalls = 0;
    }
    if (log && (iter % 100 == 0))
      *log << "opt stage=gd iter=" << iter << " j=" << value << "\n";
    prev_grad = std::move(g);
  }
  return {x, value, iter, false};
}

}  // namespace qpde
