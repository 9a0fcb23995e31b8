#include "pbr/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pbr/errors.hpp"

namespace pbr::lp {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr std::size_t kMaxPivots = 100000;

}  // namespace

EqualitySystem make_system(std::size_t rows, std::size_t cols) {
  EqualitySystem s;
  s.rows = rows;
  s.cols = cols;
  s.a.assign(rows * cols, 0.0);
  s.b.assign(rows, 0.0);
  return s;
}

PhaseOneResult phase_one(const EqualitySystem& system) {
  const std::size_t m = system.rows;
  const std::size_t n = system.cols;
  if (system.a.size() != m * n || system.b.size() != m) {
    throw DimensionError("equality system storage does not match its shape");
  }

  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<double> t(m * width, 0.0);
  std::vector<double> sign(m, 1.0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    sign[i] = system.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i * width + j] = sign[i] * system.at(i, j);
    t[i * width + n + i] = 1.0;
    t[i * width + rhs] = sign[i] * system.b[i];
    basis[i] = n + i;
  }

  // Reduced costs of the phase-one objective Σ artificials; last entry holds
  // minus the current objective value.
  std::vector<double> cost(width, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i * width + j];
    cost[rhs] -= t[i * width + rhs];
  }

  PhaseOneResult result;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = t[i * width + enter];
      if (coef <= kPivotEps) continue;
      const double ratio = t[i * width + rhs] / coef;
      if (leave == m || ratio < best - kPivotEps) {
        best = ratio;
        leave = i;
      } else if (ratio <= best + kPivotEps && basis[i] < basis[leave]) {
        leave = i;
      }
    }
    // The phase-one objective is bounded below by zero, so an improving
    // column always has a positive entry.
    if (leave == m) throw Error("phase-one simplex found an unbounded direction");

    const double pivot = t[leave * width + enter];
    for (std::size_t j = 0; j < width; ++j) t[leave * width + j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i * width + enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i * width + j] -= f * t[leave * width + j];
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave * width + j];
    basis[leave] = enter;

    if (++result.pivots > kMaxPivots) throw Error("phase-one simplex exceeded its pivot budget");
  }

  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = std::max(0.0, t[i * width + rhs]);
  }
  result.infeasibility = std::max(0.0, -cost[rhs]);
  result.farkas.resize(m);
  for (std::size_t i = 0; i < m; ++i) result.farkas[i] = sign[i] * (1.0 - cost[n + i]);
  return result;
}

EqualitySystem select_rows(const EqualitySystem& system, const std::vector<std::size_t>& rows) {
  auto sub = make_system(rows.size(), system.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < system.cols; ++j) sub.at(i, j) = system.at(rows[i], j);
    sub.b[i] = system.b[rows[i]];
  }
  return sub;
}

std::vector<std::size_t> irreducible_infeasible_rows(const EqualitySystem& system,
                                                     double tolerance) {
  std::vector<std::size_t> kept(system.rows);
  for (std::size_t i = 0; i < system.rows; ++i) kept[i] = i;
  if (phase_one(system).infeasibility <= tolerance) return {};

  for (std::size_t pos = 0; pos < kept.size();) {
    auto trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (!trial.empty() && phase_one(select_rows(system, trial)).infeasibility > tolerance) {
      kept = std::move(trial);
    } else {
      ++pos;
    }
  }
  return kept;
}

double max_residual(const EqualitySystem& system, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < system.rows; ++i) {
    double r = -system.b[i];
    for (std::size_t j = 0; j < system.cols; ++j) r += system.at(i, j) * x[j];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double max_certificate_slack(const EqualitySystem& system, const std::vector<double>& y) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < system.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < system.rows; ++i) s += system.at(i, j) * y[i];
    worst = std::max(worst, s);
  }
  return worst;
}

double certificate_gap(const EqualitySystem& system, const std::vector<double>& y) {
  double g = 0.0;
  for (std::size_t i = 0; i < system.rows; ++i) g += system.b[i] * y[i];
  return g;
}

}  // namespace pbr::lp
