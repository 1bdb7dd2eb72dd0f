#include "tropspec/config.hpp"

#include <cstdlib>
#include <string>

namespace tropspec {

namespace {

void read_env(const char* name, double& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  try {
    field = std::stod(raw);
  } catch (...) {
    // leave the default in place on malformed input
  }
}

}  // namespace

const Config& Config::defaults() {
  static const Config cfg{};
  return cfg;
}

Config Config::from_env() {
  Config cfg;
  read_env("TROPSPEC_PIVOT_TOL", cfg.pivot_rel_tol);
  read_env("TROPSPEC_NULLSPACE_TOL", cfg.nullspace_tol);
  read_env("TROPSPEC_ZERO_EIG_TOL", cfg.zero_eig_rel_tol);
  read_env("TROPSPEC_SIMPLE_EIG_TOL", cfg.simple_eig_rel_tol);
  read_env("TROPSPEC_SLOPE_TOL", cfg.slope_tol);
  read_env("TROPSPEC_COEFF_TOL", cfg.coeff_rel_tol);
  return cfg;
}

bool internal_checks_enabled() {
  static const bool enabled = [] {
    if (const char* raw = std::getenv("TROPSPEC_CHECKS"))
      return std::string(raw) != "0";
#ifdef NDEBUG
    return false;
#else
    return true;
#endif
  }();
  return enabled;
}

}  // namespace tropspec
