#pragma once

// Brute-force reference implementations and random instance generators.
// Everything here is deliberately independent of the library's algorithmic
// paths: circuits are enumerated, permanents walk all permutations, covers
// try all permutations of the node set.

#include <algorithm>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tropspec/complex_linalg.hpp"
#include "tropspec/tropical.hpp"

namespace oracles {

using tropspec::CMatrix;
using tropspec::Complex;
using tropspec::Digraph;
using tropspec::Rational;
using tropspec::TropMatrix;
using tropspec::TropScalar;

struct Circuit {
  std::vector<int> nodes;  // closed: arc i->i+1, last->first
};

// All elementary circuits: each is rooted at its minimal node.
inline std::vector<Circuit> elementary_circuits(const TropMatrix& a) {
  const int n = a.n();
  std::vector<Circuit> out;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  auto extend = [&](auto&& self, int root, int v) -> void {
    for (int w = 0; w < n; ++w) {
      if (a.at(v, w).is_zero() || w < root) continue;
      if (w == root) {
        out.push_back({path});
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, root, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (int root = 0; root < n; ++root) {
    path = {root};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[root] = true;
    extend(extend, root, root);
  }
  return out;
}

inline TropScalar circuit_weight(const TropMatrix& a, const Circuit& c) {
  TropScalar w = TropScalar::one();
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    w = otimes(w, a.at(c.nodes[i], c.nodes[(i + 1) % c.nodes.size()]));
  return w;
}

inline std::optional<Rational> brute_min_circuit_mean(const TropMatrix& a) {
  std::optional<Rational> best;
  for (const Circuit& c : elementary_circuits(a)) {
    TropScalar w = circuit_weight(a, c);
    if (w.is_zero()) continue;
    Rational mean = w.value() / Rational(static_cast<int>(c.nodes.size()));
    if (!best || mean < *best) best = mean;
  }
  return best;
}

inline TropScalar brute_permanent(const TropMatrix& a) {
  const int n = a.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  TropScalar best = TropScalar::zero();
  do {
    TropScalar w = TropScalar::one();
    for (int i = 0; i < n && !w.is_zero(); ++i) w = otimes(w, a.at(i, perm[i]));
    best = oplus(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_circuit_cover(const Digraph& g) {
  std::vector<int> nodes = g.nodes();
  if (nodes.empty()) return true;
  std::vector<int> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size() && ok; ++i)
      ok = g.has_arc(nodes[i], nodes[perm[i]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  Rational rational(int range, int max_den) {
    return Rational(uniform(-range, range), uniform(1, max_den));
  }
  Complex complex_unit_box() {
    return Complex(real(-1.0, 1.0), real(-1.0, 1.0));
  }
  // nonzero coefficients bounded away from 0, to keep instances generic
  Complex generic_coeff() {
    double mod = real(0.5, 2.0);
    double phase = real(-3.14, 3.14);
    return Complex(mod * std::cos(phase), mod * std::sin(phase));
  }
};

// Random irreducible matrix: a random sparse pattern plus a random
// Hamiltonian circuit that guarantees strong connectivity.
inline TropMatrix random_irreducible(Rng& rng, int n, int range = 6,
                                     int max_den = 1, int density_pct = 40) {
  TropMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.uniform(0, 99) < density_pct)
        a.at(i, j) = TropScalar(rng.rational(range, max_den));
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::shuffle(cycle.begin(), cycle.end(), rng.gen);
  for (int i = 0; i < n; ++i)
    a.at(cycle[i], cycle[(i + 1) % n]) = TropScalar(rng.rational(range, max_den));
  return a;
}

inline CMatrix random_cmatrix(Rng& rng, int rows, int cols) {
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.complex_unit_box();
  return m;
}

inline CMatrix random_generic_cmatrix(Rng& rng, int rows, int cols) {
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.generic_coeff();
  return m;
}

// complex multisets agree up to tol, greedy nearest matching
inline bool match_multiset(const std::vector<Complex>& a,
                           const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> taken(b.size(), false);
  for (const Complex& x : a) {
    int best = -1;
    double dist = tol;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (taken[j]) continue;
      double d = std::abs(x - b[j]);
      if (best < 0 ? d <= dist : d < dist) {
        dist = d;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) return false;
    taken[best] = true;
  }
  return true;
}

}  // namespace oracles
