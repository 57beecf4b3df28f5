#pragma once

#include <vector>

namespace qpde {

/// Plain root-sum-square deviation, no grid normalization.
double l2_error(const std::vector<double>& y_ref, const std::vector<double>& y_test);

/// sqrt(1 - sum_k |yhat_ref_k * yhat_test_k|^2) with hat = entry over the
/// vector's l2 norm.
double trace_distance(const std::vector<double>& y_ref, const std::vector<double>& y_test);

double time_average(const std::vector<double>& series);

}  // namespace qpde
