#include "qpde/stateprep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qpde {

namespace {

double overlap_with(const std::vector<double>& g_hat, const AnsatzConfig& cfg,
                    const std::vector<double>& params) {
  const auto sv = ansatz_state(cfg, params);
  double o = 0.0;
  for (std::size_t k = 0; k < g_hat.size(); ++k) o += g_hat[k] * std::real(sv[k]);
  return o;
}

}  // namespace

FitCache::FitCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    std::vector<double> params;
    double v;
    while (ss >> v) params.push_back(v);
    if (!params.empty()) entries_[key] = std::move(params);
  }
}

std::optional<std::vector<double>> FitCache::lookup(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FitCache::store(const std::string& key, const std::vector<double>& params) {
  entries_[key] = params;
}

void FitCache::save() const {
  std::ofstream out(path_);
  for (const auto& [key, params] : entries_) {
    out << key;
    char buf[32];
    for (double v : params) {
      std::snprintf(buf, sizeof buf, " %.17g", v);
      out << buf;
    }
    out << "\n";
  }
}

std::string FitCache::key_of(const std::vector<double>& g, const AnsatzConfig& cfg) {
  // FNV-1a over the raw sample bits plus the circuit shape
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  for (double v : g) mix(&v, sizeof v);
  mix(&cfg.n_qubits, sizeof cfg.n_qubits);
  mix(&cfg.depth, sizeof cfg.depth);
  char buf[32];
  std::snprintf(buf, sizeof buf, "g%016llx_n%d_d%d", static_cast<unsigned long long>(h),
                cfg.n_qubits, cfg.depth);
  return buf;
}

FitResult fit_function_gate(const std::vector<double>& g, const AnsatzConfig& cfg,
                            const FitBudget& budget, std::uint64_t seed, FitCache* cache) {
  if (static_cast<int>(g.size()) != (1 << cfg.n_qubits))
    throw std::invalid_argument("sample count must equal the register size");
  double norm2 = 0.0;
  for (double v : g) norm2 += v * v;
  if (norm2 == 0.0) throw std::invalid_argument("cannot encode the zero vector");
  const double norm = std::sqrt(norm2);
  std::vector<double> g_hat(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) g_hat[k] = g[k] / norm;

  FitResult best;
  best.lambda0 = 1.0 / norm;

  AnsatzConfig attempt = cfg;
  for (int bump = 0; bump <= budget.depth_bumps; ++bump, ++attempt.depth) {
    const int dim = parameter_count(attempt);
    const ObjectiveFn objective = [&](const std::vector<double>& params) {
      return 1.0 - overlap_with(g_hat, attempt, params);
    };
    // exact half-frequency shift rule for the linear overlap
    const GradientFn gradient = [&](const std::vector<double>& params) {
      std::vector<double> grad(params.size());
      std::vector<double> shifted = params;
      for (std::size_t i = 0; i < params.size(); ++i) {
        shifted[i] = params[i] + std::numbers::pi;
        const double plus = objective(shifted);
        shifted[i] = params[i] - std::numbers::pi;
        const double minus = objective(shifted);
        shifted[i] = params[i];
        grad[i] = (plus - minus) / 4.0;
      }
      return grad;
    };

    std::optional<std::vector<double>> cached;
    if (cache) cached = cache->lookup(FitCache::key_of(g, attempt));

    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(bump));
    std::vector<double> start;
    if (cached && static_cast<int>(cached->size()) == dim) {
      start = *cached;
    } else {
      const std::vector<double> lo(dim, 0.0), hi(dim, 4 * std::numbers::pi);
      start = pso_minimize(objective, lo, hi, budget.pso, rng).x;
    }
    const auto polished = gd_minimize(objective, gradient, start, budget.gd);

    if (bump == 0 || polished.value < best.residual) {
      best.params = polished.x;
      best.residual = polished.value;
      best.config = attempt;
    }
    if (best.residual <= budget.threshold) break;
  }

  best.converged = best.residual <= budget.threshold;
  best.gate = build_ansatz(best.config, best.params);
  if (cache && best.converged) {
    cache->store(FitCache::key_of(g, best.config), best.params);
    cache->save();
  }
  return best;
}

Circuit uniform_state_gate(int n_qubits) {
  Circuit c(n_qubits);
  for (int q = 0; q < n_qubits; ++q) c.push(GateOp::h(q));
  return c;
}

Circuit endpoint_state_gate(int n_qubits, double left, double right) {
  if (left == 0.0 && right == 0.0)
    throw std::invalid_argument("endpoint state needs a nonzero weight");
  Circuit c(n_qubits);
  const double theta = 2.0 * std::atan2(right, left);
  c.push(GateOp::ry(theta, n_qubits - 1));
  for (int q = 0; q < n_qubits - 1; ++q) c.push(GateOp::cnot(n_qubits - 1, q));
  return c;
}

}  // namespace qpde
