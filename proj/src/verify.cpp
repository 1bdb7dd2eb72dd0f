#include "tropspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "tropspec/assignment.hpp"

namespace tropspec {

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int i = 2; i <= 8; ++i) grid.push_back(std::pow(10.0, -0.5 * i));
  return grid;
}

CMatrix instantiate(const PerturbedMatrix& p, double eps, const Config& cfg) {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error("eps must lie in (0,1]");
  const int n = p.n();
  const double decades = std::log10(eps);
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const TropScalar& e = p.exponents().at(i, j);
      if (e.is_zero()) continue;
      double expo = e.value().to_double();
      if (std::abs(expo * decades) > cfg.max_pow_decades)
        throw Error("instantiation overflows double range");
      out.at(i, j) = p.coeffs().at(i, j) * std::pow(eps, expo);
    }
  return out;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw DimensionError("slope fit needs >= 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

namespace {

double wrapped_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

double safe_log_abs(const Complex& z) {
  return std::log(std::max(std::abs(z), 1e-300));
}

}  // namespace

VerificationReport numeric_check_matrices(const EigAsymptotics& pred,
                                          const std::vector<double>& grid,
                                          const std::vector<CMatrix>& mats,
                                          const Config& cfg) {
  if (grid.size() != mats.size())
    throw DimensionError("grid and matrix family sizes differ");

  struct Target {
    Complex lambda;
    double exponent;
    TropScalar exponent_exact;
  };
  std::vector<Target> targets;
  for (const Branch& b : pred.equivalents())
    targets.push_back({b.coeff, b.exponent.value().to_double(), b.exponent});
  const int n_targets = static_cast<int>(targets.size());

  // eigensolves are independent; evaluate grid points in parallel
  std::vector<CVector> spectra(grid.size());
  std::vector<char> usable(grid.size(), 0);
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < static_cast<int>(grid.size()); ++t) {
    try {
      spectra[t] = eigenvalues(mats[t]);
      usable[t] = 1;
    } catch (const ConvergenceError&) {
      usable[t] = 0;  // point skipped, noted in the report
    } catch (...) {
      bool expected = false;
      if (failed.compare_exchange_strong(expected, true))
        first_error = std::current_exception();
    }
  }
  if (failed.load()) std::rethrow_exception(first_error);

  VerificationReport report;
  std::vector<int> used_idx;
  for (std::size_t t = 0; t < grid.size(); ++t) {
    if (usable[t]) {
      report.grid_used.push_back(grid[t]);
      used_idx.push_back(static_cast<int>(t));
    } else {
      report.grid_skipped.push_back(grid[t]);
    }
  }
  if (report.grid_used.size() < 2)
    throw Error("fewer than two usable grid points");

  const int n = mats[used_idx.front()].rows();
  const int n_left = n - n_targets;
  if (n_left < 0) throw Error("more predictions than eigenvalues");

  // branch_values[b][t]: matched eigenvalue of branch b at used point t;
  // branches 0..n_targets-1 are predictions, the rest leftovers ordered by
  // descending modulus.
  std::vector<std::vector<Complex>> branch_values(
      n, std::vector<Complex>(used_idx.size()));
  for (std::size_t tt = 0; tt < used_idx.size(); ++tt) {
    double eps = grid[used_idx[tt]];
    const CVector& eigs = spectra[used_idx[tt]];
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < n_targets; ++e) {
        double modulus_gap = safe_log_abs(eigs[i]) -
                             std::log(std::abs(targets[e].lambda)) -
                             targets[e].exponent * std::log(eps);
        double phase_gap = wrapped_angle(std::arg(eigs[i]) -
                                         std::arg(targets[e].lambda));
        cost[i][e] = std::abs(modulus_gap) + std::abs(phase_gap);
      }
    auto assign = solve_assignment(cost);
    if (!assign.feasible) throw Error("internal: matching infeasible");

    std::vector<Complex> leftover;
    for (int i = 0; i < n; ++i) {
      int e = assign.row_to_col[i];
      if (e < n_targets) {
        branch_values[e][tt] = eigs[i];
      } else {
        leftover.push_back(eigs[i]);
      }
    }
    std::sort(leftover.begin(), leftover.end(),
              [](const Complex& a, const Complex& b) {
                return std::abs(a) > std::abs(b);
              });
    for (int r = 0; r < n_left; ++r)
      branch_values[n_targets + r][tt] = leftover[r];
  }

  std::vector<double> log_eps;
  for (double e : report.grid_used) log_eps.push_back(std::log(e));
  const std::size_t smallest =
      std::min_element(report.grid_used.begin(), report.grid_used.end()) -
      report.grid_used.begin();

  std::vector<double> all_slopes;
  for (int b = 0; b < n; ++b) {
    std::vector<double> log_mod;
    std::vector<std::pair<double, double>> data;
    for (std::size_t tt = 0; tt < used_idx.size(); ++tt) {
      log_mod.push_back(safe_log_abs(branch_values[b][tt]));
      data.emplace_back(log_eps[tt], log_mod.back());
    }
    double slope = fit_slope(log_eps, log_mod);
    all_slopes.push_back(slope);
    report.branch_data.push_back(std::move(data));

    if (b < n_targets) {
      const Target& tg = targets[b];
      PredictionCheck check;
      check.lambda = tg.lambda;
      check.exponent = tg.exponent_exact;
      check.fitted_slope = slope;
      check.slope_error = std::abs(slope - tg.exponent);
      double eps_min = report.grid_used[smallest];
      check.fitted_coeff = branch_values[b][smallest] *
                           std::pow(eps_min, -tg.exponent);
      check.coeff_rel_error =
          std::abs(check.fitted_coeff - tg.lambda) / std::abs(tg.lambda);
      for (std::size_t tt = 0; tt < used_idx.size(); ++tt)
        check.residuals.push_back(std::abs(log_mod[tt] -
                                           std::log(std::abs(tg.lambda)) -
                                           tg.exponent * log_eps[tt]));
      check.pass = check.slope_error <= cfg.slope_tol &&
                   check.coeff_rel_error <= cfg.coeff_rel_tol;
      report.predictions.push_back(std::move(check));
    } else {
      report.leftovers.push_back({slope});
    }
  }

  // per-level counting of the whole spectrum against the grouping
  for (const EigLevel& lvl : pred.levels) {
    if (!lvl.r_invertible) continue;
    LevelCountCheck counts;
    counts.level = lvl.level;
    counts.alpha = lvl.alpha.value().to_double();
    counts.expected_omega = lvl.omega_count;
    counts.expected_on_level = static_cast<int>(lvl.equivalents.size());
    counts.expected_small_o = lvl.small_o_count;
    for (double s : all_slopes) {
      if (s < counts.alpha - cfg.slope_tol) {
        ++counts.got_omega;
      } else if (s > counts.alpha + cfg.slope_tol) {
        ++counts.got_small_o;
      } else {
        ++counts.got_on_level;
      }
    }
    counts.pass = counts.got_omega == counts.expected_omega &&
                  counts.got_on_level == counts.expected_on_level &&
                  counts.got_small_o == counts.expected_small_o;
    report.level_counts.push_back(counts);
  }

  report.pass = true;
  for (const auto& c : report.predictions) report.pass &= c.pass;
  for (const auto& c : report.level_counts) report.pass &= c.pass;
  return report;
}

VerificationReport numeric_check(const PerturbedMatrix& p,
                                 const EigAsymptotics& pred,
                                 const std::vector<double>& grid,
                                 const Config& cfg) {
  std::vector<CMatrix> mats;
  std::vector<double> kept;
  for (double eps : grid) {
    try {
      mats.push_back(instantiate(p, eps, cfg));
      kept.push_back(eps);
    } catch (const Error&) {
      // overflow guard tripped; drop the point
    }
  }
  VerificationReport report = numeric_check_matrices(pred, kept, mats, cfg);
  for (double eps : grid)
    if (std::find(kept.begin(), kept.end(), eps) == kept.end())
      report.grid_skipped.push_back(eps);
  return report;
}

}  // namespace tropspec
