#pragma once

namespace tropspec {

/// Numerical tolerances shared across the complex backend, the asymptotic
/// pipeline and the verification oracle. The CLI overrides fields from
/// TROPSPEC_* environment variables.
struct Config {
  // complex-linalg
  double pivot_rel_tol = 1e-10;     // LU pivot ratio below which a block is singular
  double nullspace_tol = 1e-8;      // singular-value cutoff, relative to the largest
  // asymptotics
  double zero_eig_rel_tol = 1e-9;   // |eigenvalue| below this times the norm counts as 0
  double simple_eig_rel_tol = 1e-6; // minimal eigenvalue separation for simplicity
  // verify
  double slope_tol = 0.05;
  double coeff_rel_tol = 0.1;
  double max_pow_decades = 250.0;   // skip grid points with |exp * log10(eps)| beyond this

  static const Config& defaults();
  static Config from_env();
};

/// Theorem-level consistency assertions (cheap, O(n^3)) run by default in
/// debug builds; TROPSPEC_CHECKS=0/1 forces them off or on.
bool internal_checks_enabled();

}  // namespace tropspec
