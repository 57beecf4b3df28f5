#include "qpde/fd.hpp"

#include <cmath>
#include <stdexcept>

namespace qpde {

namespace {

/// Dense solve with partial pivoting; sizes stay at desk scale.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14) throw std::runtime_error("singular linear system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

/// Thomas algorithm for strictly tridiagonal rows.
std::vector<double> thomas_solve(const std::vector<std::vector<double>>& a,
                                 std::vector<double> d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> c_prime(n, 0.0);
  double diag = a[0][0];
  if (std::abs(diag) < 1e-14) throw std::runtime_error("singular tridiagonal system");
  c_prime[0] = (n > 1) ? a[0][1] / diag : 0.0;
  d[0] /= diag;
  for (int i = 1; i < n; ++i) {
    const double lower = a[i][i - 1];
    const double denom = a[i][i] - lower * c_prime[i - 1];
    if (std::abs(denom) < 1e-14) throw std::runtime_error("singular tridiagonal system");
    if (i + 1 < n) c_prime[i] = a[i][i + 1] / denom;
    d[i] = (d[i] - lower * d[i - 1]) / denom;
  }
  for (int i = n - 2; i >= 0; --i) d[i] -= c_prime[i] * d[i + 1];
  return d;
}

bool is_tridiagonal(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (std::abs(r - c) > 1 && a[r][c] != 0.0) return false;
  return true;
}

std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  if (is_tridiagonal(a)) return thomas_solve(a, std::move(b));
  return dense_solve(std::move(a), std::move(b));
}

std::vector<double> full_rhs(const ProblemSpec& p) {
  auto rhs = p.source_samples();
  const auto bc = boundary_rhs(p);
  for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += bc[k];
  return rhs;
}

}  // namespace

std::vector<std::vector<double>> stencil_matrix(const ProblemSpec& p) {
  p.validate();
  const int n = p.n_points();
  const double scale = p.nu / (p.dx() * p.dx());
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    a[k][k] = 2.0 * scale;
    if (k > 0) a[k][k - 1] = -scale;
    if (k + 1 < n) a[k][k + 1] = -scale;
  }
  if (p.boundary.periodic()) {
    a[0][n - 1] -= scale;
    a[n - 1][0] -= scale;
  } else {
    a[0][0] -= scale * ghost_left(p.boundary.left, p.dx()).c;
    a[n - 1][n - 1] -= scale * ghost_right(p.boundary.right, p.dx()).c;
  }
  const auto pot = p.potential_samples();
  for (int k = 0; k < n; ++k) a[k][k] -= p.zeta * pot[k];
  return a;
}

std::vector<double> boundary_rhs(const ProblemSpec& p) {
  const int n = p.n_points();
  std::vector<double> rhs(n, 0.0);
  if (!p.boundary.periodic()) {
    const double scale = p.nu / (p.dx() * p.dx());
    rhs[0] += scale * ghost_left(p.boundary.left, p.dx()).d;
    rhs[n - 1] += scale * ghost_right(p.boundary.right, p.dx()).d;
  }
  return rhs;
}

std::vector<double> fd_solve_steady(const ProblemSpec& p) {
  auto a = stencil_matrix(p);
  auto rhs = full_rhs(p);
  if (singular_operator(p)) {
    double sum = 0.0, scale = 1.0;
    for (double v : rhs) {
      sum += v;
      scale = std::max(scale, std::abs(v));
    }
    if (std::abs(sum) > 1e-9 * scale)
      throw std::runtime_error("singular system with incompatible data");
    // replace the last (redundant) row by the central anchor
    const int n = p.n_points();
    std::fill(a[n - 1].begin(), a[n - 1].end(), 0.0);
    a[n - 1][n / 2 - 1] = 0.5;
    a[n - 1][n / 2] = 0.5;
    rhs[n - 1] = 0.0;
    return dense_solve(std::move(a), std::move(rhs));
  }
  return solve(std::move(a), std::move(rhs));
}

std::vector<double> fd_step_transient(const ProblemSpec& p, const std::vector<double>& y_prev) {
  if (!p.transient()) throw std::invalid_argument("transient step needs dt > 0");
  if (static_cast<int>(y_prev.size()) != p.n_points())
    throw std::invalid_argument("previous-step length mismatch");
  auto a = stencil_matrix(p);
  auto rhs = full_rhs(p);
  const double inv_dt = 1.0 / p.dt;
  for (int k = 0; k < p.n_points(); ++k) {
    a[k][k] += inv_dt;
    rhs[k] += y_prev[k] * inv_dt;
  }
  return solve(std::move(a), std::move(rhs));
}

std::vector<double> anchor(const ProblemSpec& p, std::vector<double> y) {
  if (!singular_operator(p)) return y;
  const int n = static_cast<int>(y.size());
  const double offset = 0.5 * (y[n / 2 - 1] + y[n / 2]);
  for (double& v : y) v -= offset;
  return y;
}

std::pair<double, double> boundary_values(const ProblemSpec& p, const std::vector<double>& y) {
  const int n = p.n_points();
  if (p.boundary.periodic()) return {y[n - 1], y[0]};
  const auto gl = ghost_left(p.boundary.left, p.dx());
  const auto gr = ghost_right(p.boundary.right, p.dx());
  return {gl.c * y[0] + gl.d, gr.c * y[n - 1] + gr.d};
}

}  // namespace qpde
