#include "tropspec/kernels.hpp"

#include <atomic>
#include <cmath>
#include <exception>

namespace tropspec {

double TropScalar::to_double() const {
  return inf_ ? HUGE_VAL : v_.to_double();
}

namespace {

// Dimension below which the OpenMP variants fall back to the serial path;
// thread startup dominates for tiny matrices.
constexpr int kParallelCutoff = 48;

// Rationals can throw on overflow; exceptions must not escape an OpenMP
// region, so each worker parks the first one here.
struct ErrorCollector {
  std::atomic<bool> failed{false};
  std::exception_ptr first;

  template <class F>
  void run(F&& f) {
    if (failed.load(std::memory_order_relaxed)) return;
    try {
      f();
    } catch (...) {
      bool expected = false;
      if (failed.compare_exchange_strong(expected, true)) {
        first = std::current_exception();
      }
    }
  }

  void rethrow() const {
    if (failed.load()) std::rethrow_exception(first);
  }
};

void matmul_row(const TropMatrix& a, const TropMatrix& b, int i,
                TropMatrix& c) {
  const int n = a.n();
  for (int j = 0; j < n; ++j) {
    TropScalar best = TropScalar::zero();
    for (int k = 0; k < n; ++k) {
      best = oplus(best, otimes(a.at(i, k), b.at(k, j)));
    }
    c.at(i, j) = best;
  }
}

void closure_pass(TropMatrix& d, int k, int i) {
  const int n = d.n();
  const TropScalar dik = d.at(i, k);
  if (dik.is_zero()) return;
  for (int j = 0; j < n; ++j) {
    d.at(i, j) = oplus(d.at(i, j), otimes(dik, d.at(k, j)));
  }
}

}  // namespace

TropMatrix trop_matmul_serial(const TropMatrix& a, const TropMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("trop_matmul: dimension mismatch");
  TropMatrix c(a.n());
  for (int i = 0; i < a.n(); ++i) matmul_row(a, b, i, c);
  return c;
}

TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("trop_matmul: dimension mismatch");
  const int n = a.n();
  if (n < kParallelCutoff) return trop_matmul_serial(a, b);
  TropMatrix c(n);
  ErrorCollector errors;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    errors.run([&, i] { matmul_row(a, b, i, c); });
  }
  errors.rethrow();
  return c;
}

TropVector trop_matvec(const TropMatrix& a, const TropVector& v) {
  if (static_cast<int>(v.size()) != a.n())
    throw DimensionError("trop_matvec: dimension mismatch");
  const int n = a.n();
  TropVector out(n, TropScalar::zero());
  for (int i = 0; i < n; ++i) {
    TropScalar best = TropScalar::zero();
    for (int k = 0; k < n; ++k) best = oplus(best, otimes(a.at(i, k), v[k]));
    out[i] = best;
  }
  return out;
}

TropMatrix trop_plus_closure_serial(const TropMatrix& a) {
  TropMatrix d = a;
  const int n = d.n();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) closure_pass(d, k, i);
  return d;
}

TropMatrix trop_plus_closure(const TropMatrix& a) {
  const int n = a.n();
  if (n < kParallelCutoff) return trop_plus_closure_serial(a);
  TropMatrix d = a;
  ErrorCollector errors;
  for (int k = 0; k < n; ++k) {
    // With no negative circuit d(k,k) >= 0, so row k is a fixed point of
    // pass k and the remaining rows are independent.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      errors.run([&, k, i] { closure_pass(d, k, i); });
    }
    errors.rethrow();
  }
  return d;
}

}  // namespace tropspec
