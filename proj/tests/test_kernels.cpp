#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropspec/kernels.hpp"

#include "oracles.hpp"

using namespace tropspec;

namespace {

// dense random matrix with nonnegative entries (safe for the closure)
TropMatrix random_dense(oracles::Rng& rng, int n, bool nonneg) {
  TropMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.uniform(0, 99) < 85)
        a.at(i, j) = TropScalar(
            Rational(rng.uniform(nonneg ? 0 : -9, 9), rng.uniform(1, 2)));
  return a;
}

}  // namespace

TEST_CASE("parallel product matches the serial reference") {
  oracles::Rng rng(1);
  for (int n : {1, 7, 47, 48, 64, 90}) {
    TropMatrix a = random_dense(rng, n, false);
    TropMatrix b = random_dense(rng, n, false);
    CHECK(trop_matmul(a, b) == trop_matmul_serial(a, b));
  }
}

TEST_CASE("parallel closure matches the serial reference") {
  oracles::Rng rng(2);
  for (int n : {1, 9, 48, 72}) {
    TropMatrix a = random_dense(rng, n, true);
    CHECK(trop_plus_closure(a) == trop_plus_closure_serial(a));
  }
}

TEST_CASE("overflow inside a parallel region is reported") {
  const int n = 64;
  TropMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = TropScalar(Rational(INT64_MAX / 2 + 1));
  CHECK_THROWS_AS(trop_matmul(a, a), OverflowError);
}

TEST_CASE("matvec agrees with the product against a column") {
  oracles::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform(1, 12);
    TropMatrix a = random_dense(rng, n, false);
    TropVector v(n);
    for (int i = 0; i < n; ++i) v[i] = TropScalar(rng.rational(9, 2));
    TropVector got = trop_matvec(a, v);
    for (int i = 0; i < n; ++i) {
      TropScalar expect = TropScalar::zero();
      for (int k = 0; k < n; ++k)
        expect = oplus(expect, otimes(a.at(i, k), v[k]));
      CHECK(got[i] == expect);
    }
  }
}
