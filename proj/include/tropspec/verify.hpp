#pragma once

#include <vector>

#include "tropspec/asymptotics.hpp"

namespace tropspec {

/// One predicted equivalent lambda * eps^Lambda checked against the fitted
/// behaviour of the numerical eigenvalue branch matched to it.
struct PredictionCheck {
  Complex lambda;
  TropScalar exponent;
  double fitted_slope = 0.0;
  Complex fitted_coeff{0.0, 0.0};
  double slope_error = 0.0;
  double coeff_rel_error = 0.0;
  bool pass = false;
  std::vector<double> residuals;  // per usable grid point
};

/// Fitted slope of a numerical branch not matched to any equivalent.
struct LeftoverBranch {
  double fitted_slope = 0.0;
};

/// Spectrum bookkeeping of one level: slopes strictly below alpha by the
/// margin count as omega, strictly above as o, the rest as on-level.
struct LevelCountCheck {
  int level = 0;
  double alpha = 0.0;
  int expected_omega = 0, expected_on_level = 0, expected_small_o = 0;
  int got_omega = 0, got_on_level = 0, got_small_o = 0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<double> grid_used;
  std::vector<double> grid_skipped;
  std::vector<PredictionCheck> predictions;
  std::vector<LeftoverBranch> leftovers;
  std::vector<LevelCountCheck> level_counts;
  bool pass = false;

  /// (log eps, log |L|) pairs per matched branch, for external plotting.
  std::vector<std::vector<std::pair<double, double>>> branch_data;
};

/// Geometric default grid 10^-1, 10^-1.5, ..., 10^-4.
std::vector<double> default_grid();

/// Entry-wise a_ij * eps^{A_ij}; infinite exponents give exact zeros.
/// eps must lie in (0,1); exponents that would leave double range raise
/// an Error (numeric_check skips such grid points).
CMatrix instantiate(const PerturbedMatrix& p, double eps,
                    const Config& cfg = Config::defaults());

/// Eigensolve the instantiated matrix over the grid, match eigenvalues to
/// the predicted equivalents by assignment on (log-modulus, phase)
/// distance, fit slopes by least squares, and compare coefficients by
/// extrapolation at the smallest usable eps.
VerificationReport numeric_check(const PerturbedMatrix& p,
                                 const EigAsymptotics& pred,
                                 const std::vector<double>& grid,
                                 const Config& cfg = Config::defaults());

/// The same check against an explicit matrix family (one matrix per grid
/// point); used when the exact perturbed family, not just its first-order
/// data, is available.
VerificationReport numeric_check_matrices(const EigAsymptotics& pred,
                                          const std::vector<double>& grid,
                                          const std::vector<CMatrix>& mats,
                                          const Config& cfg = Config::defaults());

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tropspec
