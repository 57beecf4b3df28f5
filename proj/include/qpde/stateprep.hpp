#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qpde/ansatz.hpp"
#include "qpde/optimizer.hpp"

namespace qpde {

struct FitResult {
  double lambda0 = 0.0;  // 1/|g|, the closed-form amplitude of the encoding
  std::vector<double> params;
  double residual = 1.0;  // 1 - Re<u|g_hat> at the optimum
  bool converged = false;
  AnsatzConfig config;
  Circuit gate;
};

struct FitBudget {
  PsoConfig pso{60, 250, 0.7, 1.5, 1.5, 1e-9, 0};
  GdConfig gd{0.5, 3000, 1e-10};
  double threshold = 1e-6;
  int depth_bumps = 2;  // retries with a deeper circuit before giving up
};

/// Cache of fitted parameters keyed by (sample hash, n, d); persisted as a
/// plain text file so repeated time steps skip refits.
class FitCache {
 public:
  explicit FitCache(std::string path);
  std::optional<std::vector<double>> lookup(const std::string& key) const;
  void store(const std::string& key, const std::vector<double>& params);
  void save() const;

  static std::string key_of(const std::vector<double>& g, const AnsatzConfig& cfg);

 private:
  std::string path_;
  std::map<std::string, std::vector<double>> entries_;
};

/// Fit the trial circuit to encode g/|g| by minimizing 1 - lambda0 <u|g>
/// with 1/lambda0^2 = sum g_k^2. Bumps the depth when the budgeted
/// optimization stalls above the threshold.
FitResult fit_function_gate(const std::vector<double>& g, const AnsatzConfig& cfg,
                            const FitBudget& budget, std::uint64_t seed,
                            FitCache* cache = nullptr);

/// Exact encoders for the sample shapes the solver manufactures itself.
Circuit uniform_state_gate(int n_qubits);
/// cos-weighted ends: a|0..0> + b|1..1> with (a, b) ~ (left, right).
Circuit endpoint_state_gate(int n_qubits, double left, double right);

}  // namespace qpde
