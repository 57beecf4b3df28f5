#include "qpde/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace qpde {

double l2_error(const std::vector<double>& y_ref, const std::vector<double>& y_test) {
  if (y_ref.size() != y_test.size()) throw std::invalid_argument("length mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < y_ref.size(); ++k) {
    const double d = y_ref[k] - y_test[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double trace_distance(const std::vector<double>& y_ref, const std::vector<double>& y_test) {
  if (y_ref.size() != y_test.size()) throw std::invalid_argument("length mismatch");
  double n_ref = 0.0, n_test = 0.0;
  for (std::size_t k = 0; k < y_ref.size(); ++k) {
    n_ref += y_ref[k] * y_ref[k];
    n_test += y_test[k] * y_test[k];
  }
  if (n_ref == 0.0 || n_test == 0.0) throw std::invalid_argument("zero-norm input");
  double overlap = 0.0;
  for (std::size_t k = 0; k < y_ref.size(); ++k) {
    const double prod = (y_ref[k] / std::sqrt(n_ref)) * (y_test[k] / std::sqrt(n_test));
    overlap += prod * prod;
  }
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double time_average(const std::vector<double>& series) {
  if (series.empty()) throw std::invalid_argument("empty series");
  double s = 0.0;
  for (double v : series) s += v;
  return s / static_cast<double>(series.size());
}

}  // namespace qpde
