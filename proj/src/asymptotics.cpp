#include "tropspec/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "tropspec/tropical_core.hpp"

namespace tropspec {

namespace {

bool branch_less(const Branch& a, const Branch& b) {
  if (a.exponent != b.exponent) return a.exponent < b.exponent;
  return eigenvalue_less(a.coeff, b.coeff);
}

TropMatrix star_of_normalized(const TropMatrix& ahat) {
  // rho_min(ahat) = 0 by construction, so the star is finite
  return kleene_star(ahat);
}

TropVector star_column(const TropMatrix& star, int j) {
  TropVector v(star.n());
  for (int i = 0; i < star.n(); ++i) v[i] = star.at(i, j);
  return v;
}

CMatrix mask_by_graph(const CMatrix& a, const Digraph& g) {
  CMatrix out(a.rows(), a.cols());
  for (const auto& [i, j] : g.arcs()) out.at(i, j) = a.at(i, j);
  return out;
}

std::vector<int> positions_in(const std::vector<int>& subset,
                              const std::vector<int>& universe) {
  std::vector<int> pos;
  for (int x : subset) {
    auto it = std::lower_bound(universe.begin(), universe.end(), x);
    if (it == universe.end() || *it != x)
      throw Error("internal: label missing from universe");
    pos.push_back(static_cast<int>(it - universe.begin()));
  }
  return pos;
}

}  // namespace

PerturbedMatrix::PerturbedMatrix(CMatrix coeffs, TropMatrix exponents)
    : coeffs_(std::move(coeffs)), exponents_(std::move(exponents)) {
  if (!coeffs_.square() || coeffs_.rows() != exponents_.n())
    throw DimensionError("coefficient and exponent matrices must agree");
  coeffs_.check_finite();
  for (int i = 0; i < exponents_.n(); ++i)
    for (int j = 0; j < exponents_.n(); ++j)
      if (exponents_.at(i, j).is_zero()) coeffs_.at(i, j) = 0.0;
  if (!is_irreducible(exponents_))
    throw ReducibleMatrixError("irreducible matrix required");
}

std::vector<Branch> newton_puiseux_first_order(
    const std::vector<FirstOrderCoeff>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw DimensionError("need degree >= 1");
  if (coeffs[n].exponent != TropScalar::one() ||
      coeffs[n].coeff != Complex(1.0, 0.0))
    throw Error("polynomial must be monic with exponent 0");

  TropPoly p;
  CVector lead(n + 1);
  for (int j = 0; j <= n; ++j) {
    p.coeffs.push_back(coeffs[j].exponent);
    lead[j] = coeffs[j].exponent.is_zero() ? Complex(0.0, 0.0) : coeffs[j].coeff;
  }

  RootSequence roots = trop_roots(p);

  // exposed-corner conditions: without them the first-order data does not
  // determine the branches
  if (lead[0] == Complex(0.0, 0.0) && p.coeffs[0].is_finite())
    throw DegenerateError(
        "first-order data insufficient: constant coefficient vanishes");
  for (int i = 1; i <= n - 1; ++i)
    if (roots[i - 1] < roots[i] && lead[n - i] == Complex(0.0, 0.0))
      throw DegenerateError(
          "first-order data insufficient: vanishing coefficient at corner " +
          std::to_string(n - i));

  std::vector<Branch> out;
  int i = 0;
  while (i < n) {
    const TropScalar c = roots[i];
    int k = 0;
    while (i + k < n && roots[i + k] == c) ++k;
    if (c.is_zero()) {
      for (int t = 0; t < k; ++t) out.push_back({Complex(0.0, 0.0), c});
      i += k;
      continue;
    }
    TropScalar pc = trop_eval(p, c);
    CVector selected(n + 1, Complex(0.0, 0.0));
    for (int j = 0; j <= n; ++j) {
      if (p.coeffs[j].is_zero()) continue;
      TropScalar term(p.coeffs[j].value() + Rational(j) * c.value());
      if (term == pc) selected[j] = lead[j];
    }
    int lo = 0, hi = n;
    while (lo <= n && selected[lo] == Complex(0.0, 0.0)) ++lo;
    while (hi >= 0 && selected[hi] == Complex(0.0, 0.0)) --hi;
    if (lo > hi || hi - lo != k)
      throw Error("internal: corner polynomial has unexpected support");
    CVector slice(selected.begin() + lo, selected.begin() + hi + 1);
    for (const Complex& y : poly_roots(slice)) out.push_back({y, c});
    i += k;
  }

  std::sort(out.begin(), out.end(), branch_less);
  return out;
}

GenericExponents generic_exponents(const PerturbedMatrix& p) {
  GenericExponents out;
  out.roots = char_poly_roots(p.exponents());
  CriticalDecomposition dec = critical_sequence(p.exponents());
  for (int ell = 1; ell <= dec.k; ++ell)
    if (!disjoint_circuit_cover(dec.crit_graphs[ell - 1]))
      out.cover_conditions_hold = false;
  return out;
}

std::vector<Branch> EigAsymptotics::equivalents() const {
  std::vector<Branch> out;
  for (const auto& lvl : levels)
    for (const Complex& z : lvl.equivalents) out.push_back({z, lvl.alpha});
  std::sort(out.begin(), out.end(), branch_less);
  return out;
}

namespace {

EigAsymptotics run_levels(const PerturbedMatrix& p,
                          CriticalDecomposition dec, const Digraph& g,
                          const Config& cfg) {
  EigAsymptotics out;
  out.dec = std::move(dec);
  out.all_levels_resolved = true;
  const CMatrix s1 = mask_by_graph(p.coeffs(), g);
  const int n = p.n();

  for (int ell = 1; ell <= out.dec.k; ++ell) {
    EigLevel lvl;
    lvl.level = ell;
    lvl.alpha = out.dec.alphas[ell - 1];
    std::vector<int> c_prev = out.dec.cumulative(ell - 1);
    std::vector<int> n_ell = out.dec.remaining(ell);
    const auto& c_ell = out.dec.classes[ell - 1];

    CMatrix s_ell;
    try {
      s_ell = schur_complement(c_prev, s1, cfg);
      lvl.r_invertible = true;
    } catch (const SingularBlockError&) {
      lvl.r_invertible = false;
      out.all_levels_resolved = false;
      out.levels.push_back(std::move(lvl));
      continue;
    }

    std::vector<int> pos = positions_in(c_ell, n_ell);
    CMatrix t_ell = s_ell.submatrix(pos, pos);
    CVector eigs = eigenvalues(t_ell);
    double cutoff =
        cfg.zero_eig_rel_tol * std::max(t_ell.frobenius_norm(), 1e-300);
    for (const Complex& z : eigs)
      if (std::abs(z) > cutoff) lvl.equivalents.push_back(z);
    std::sort(lvl.equivalents.begin(), lvl.equivalents.end(), eigenvalue_less);

    int m_ell = static_cast<int>(lvl.equivalents.size());
    lvl.t_invertible = (m_ell == static_cast<int>(c_ell.size()));
    lvl.omega_count = static_cast<int>(c_prev.size());
    lvl.small_o_count = static_cast<int>(n_ell.size()) - m_ell;
    if (!lvl.t_invertible) out.all_levels_resolved = false;
    if (static_cast<int>(c_prev.size()) + m_ell + lvl.small_o_count != n)
      throw Error("internal: level counts do not partition the spectrum");
    out.levels.push_back(std::move(lvl));
  }
  return out;
}

}  // namespace

EigAsymptotics eig_asymptotics(const PerturbedMatrix& p, const Config& cfg) {
  CriticalDecomposition dec = critical_sequence(p.exponents());
  Digraph g = dec.crit_graphs[dec.k - 1];
  return run_levels(p, std::move(dec), g, cfg);
}

EigAsymptotics eig_asymptotics_with_graph(const PerturbedMatrix& p,
                                          const Digraph& g,
                                          const Config& cfg) {
  CriticalDecomposition dec = critical_sequence(p.exponents());
  return run_levels(p, std::move(dec), g, cfg);
}

EigvecAsymptotics eigvec_asymptotics(const PerturbedMatrix& p, int ell,
                                     Complex mu, const Config& cfg) {
  CriticalDecomposition dec = critical_sequence(p.exponents());
  if (ell < 1 || ell > dec.k) throw DimensionError("level out of range");
  const int n = p.n();
  const Digraph& g = dec.crit_graphs[dec.k - 1];
  const CMatrix s1 = mask_by_graph(p.coeffs(), g);

  std::vector<int> c_prev = dec.cumulative(ell - 1);
  std::vector<int> n_ell = dec.remaining(ell);
  const auto& c_ell = dec.classes[ell - 1];

  CMatrix s_ell;
  try {
    s_ell = schur_complement(c_prev, s1, cfg);
  } catch (const SingularBlockError&) {
    throw SingularLevelError("pivot block r^ell is singular at level " +
                             std::to_string(ell));
  }
  std::vector<int> pos = positions_in(c_ell, n_ell);
  CMatrix t_ell = s_ell.submatrix(pos, pos);

  double scale = std::max(t_ell.frobenius_norm(), 1e-300);
  if (std::abs(mu) <= cfg.zero_eig_rel_tol * scale)
    throw Error("mu must be a nonzero eigenvalue");
  CVector eigs = eigenvalues(t_ell);
  double best = HUGE_VAL;
  double second = HUGE_VAL;
  for (const Complex& z : eigs) {
    double d = std::abs(z - mu);
    if (d < best) {
      second = best;
      best = d;
    } else if (d < second) {
      second = d;
    }
  }
  if (best > cfg.simple_eig_rel_tol * scale)
    throw Error("mu is not an eigenvalue of t^ell");
  if (second <= cfg.simple_eig_rel_tol * scale)
    throw NonSimpleEigenvalueError("mu is not numerically simple");

  // canonical eigenvector: the class whose block polynomial vanishes at mu
  const Digraph& level_graph = dec.crit_graphs[ell - 1];
  std::vector<std::vector<int>> comps = sccs(level_graph);
  std::vector<double> block_residual(comps.size(), HUGE_VAL);
  for (std::size_t nu = 0; nu < comps.size(); ++nu) {
    std::vector<int> block;
    for (int v : comps[nu])
      if (std::binary_search(c_ell.begin(), c_ell.end(), v))
        block.push_back(v);
    if (block.empty()) {
      block_residual[nu] = 1.0;  // empty product, never vanishes
      continue;
    }
    std::vector<int> bpos = positions_in(block, n_ell);
    CMatrix tb = s_ell.submatrix(bpos, bpos);
    CMatrix shifted(tb.rows(), tb.cols());
    for (int i = 0; i < tb.rows(); ++i)
      for (int j = 0; j < tb.cols(); ++j)
        shifted.at(i, j) = (i == j ? mu : Complex(0.0, 0.0)) - tb.at(i, j);
    double tol = cfg.simple_eig_rel_tol *
                 std::pow(std::abs(mu) + scale + 1.0,
                          static_cast<double>(block.size()));
    block_residual[nu] = std::abs(determinant(shifted)) / std::max(tol, 1e-300);
  }
  int chosen = -1;
  int vanishing = 0;
  for (std::size_t nu = 0; nu < comps.size(); ++nu)
    if (block_residual[nu] < 1.0) {
      ++vanishing;
      if (chosen < 0 || block_residual[nu] < block_residual[chosen])
        chosen = static_cast<int>(nu);
    }
  if (vanishing == 0) throw Error("no block polynomial vanishes at mu");
  if (vanishing > 1) throw Error("block selection for mu is ambiguous");

  int j = comps[chosen].front();
  TropMatrix star = star_of_normalized(dec.normalized[ell - 1]);
  TropVector v = star_column(star, j);
  Digraph sat = saturation_graph(dec.normalized[ell - 1], v);
  CMatrix a_sat = mask_by_graph(p.coeffs(), sat);

  CMatrix system(n, n);
  std::vector<bool> in_n_ell(n, false);
  for (int i : n_ell) in_n_ell[i] = true;
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      Complex d = (i == jj && in_n_ell[i]) ? mu : Complex(0.0, 0.0);
      system.at(i, jj) = d - a_sat.at(i, jj);
    }

  CVector w;
  try {
    w = nullspace_vector(system, cfg);
  } catch (const RankError&) {
    throw NonSimpleEigenvalueError(
        "eigenvector system does not have rank n-1");
  }

  EigvecAsymptotics out;
  out.V = std::move(v);
  double wmax = 0.0;
  for (const Complex& z : w) wmax = std::max(wmax, std::abs(z));
  int anchor = -1;
  for (int i = 0; i < n; ++i) {
    if (std::abs(w[i]) > cfg.nullspace_tol * wmax) {
      if (anchor < 0) anchor = i;
    } else {
      out.zero_positions.push_back(i);
    }
  }
  if (anchor < 0) throw NoNonzeroAnchorError("eigenvector has no usable entry");
  out.anchor = anchor;
  Complex pivot = w[anchor];
  out.w.resize(n);
  for (int i = 0; i < n; ++i)
    out.w[i] =
        std::abs(w[i]) <= cfg.nullspace_tol * wmax ? Complex(0.0, 0.0)
                                                   : w[i] / pivot;
  return out;
}

int NilSpec::size() const {
  int n = 0;
  for (std::size_t i = 0; i < m.size(); ++i) n += m[i] * q[i];
  return n;
}

void NilSpec::validate() const {
  if (m.empty() || m.size() != q.size())
    throw Error("NilSpec: m and q must be nonempty and of equal length");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || q[i] < 1) throw Error("NilSpec: entries must be positive");
    if (i + 1 < q.size() && q[i] <= q[i + 1])
      throw Error("NilSpec: q must be strictly decreasing");
  }
}

std::vector<std::pair<int, int>> NilSpec::cells() const {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int rep = 0; rep < m[i]; ++rep) {
      out.emplace_back(start, q[i]);
      start += q[i];
    }
  return out;
}

CMatrix nil_matrix(const NilSpec& spec) {
  spec.validate();
  CMatrix a(spec.size(), spec.size());
  for (const auto& [start, q] : spec.cells())
    for (int r = 0; r < q - 1; ++r) a.at(start + r, start + r + 1) = 1.0;
  return a;
}

TropMatrix anil_exponents(const NilSpec& spec) {
  spec.validate();
  const int n = spec.size();
  TropMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = TropScalar(Rational(1));
  for (const auto& [start, q] : spec.cells())
    for (int r = 0; r < q - 1; ++r)
      a.at(start + r, start + r + 1) = TropScalar::one();
  return a;
}

TropVector vnil(const NilSpec& spec) {
  spec.validate();
  TropVector v;
  for (const auto& [start, q] : spec.cells())
    for (int r = 0; r < q; ++r) v.push_back(TropScalar(Rational(r, q)));
  return v;
}

PerturbedMatrix nil_perturbation(const NilSpec& spec, const CMatrix& b) {
  spec.validate();
  const int n = spec.size();
  if (b.rows() != n || b.cols() != n)
    throw DimensionError("perturbation size does not match the spec");
  CMatrix coeffs(n, n);
  TropMatrix expo(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.at(i, j) != Complex(0.0, 0.0)) {
        coeffs.at(i, j) = b.at(i, j);
        expo.at(i, j) = TropScalar(Rational(1));
      }
  for (const auto& [start, q] : spec.cells())
    for (int r = 0; r < q - 1; ++r) {
      coeffs.at(start + r, start + r + 1) = 1.0;
      expo.at(start + r, start + r + 1) = TropScalar::one();
    }
  return PerturbedMatrix(std::move(coeffs), std::move(expo));
}

CMatrix phi_matrix(const NilSpec& spec, const CMatrix& b, int ell) {
  spec.validate();
  if (ell < 0 || ell > static_cast<int>(spec.m.size()))
    throw DimensionError("phi level out of range");
  auto cells = spec.cells();
  int count = 0;
  for (int g = 0; g < ell; ++g) count += spec.m[g];
  std::vector<int> bottom, first;
  for (int c = 0; c < count; ++c) {
    bottom.push_back(cells[c].first + cells[c].second - 1);
    first.push_back(cells[c].first);
  }
  return b.submatrix(bottom, first);
}

EigAsymptotics lidskii(const NilSpec& spec, const CMatrix& b,
                       const Config& cfg) {
  spec.validate();
  const int n = spec.size();
  if (b.rows() != n || b.cols() != n)
    throw DimensionError("perturbation size does not match the spec");
  b.check_finite();

  EigAsymptotics out;
  out.dec = critical_sequence(anil_exponents(spec));
  out.all_levels_resolved = true;
  const int k = static_cast<int>(spec.m.size());
  if (out.dec.k != k) throw Error("internal: level count mismatch");

  int covered = 0;
  for (int ell = 1; ell <= k; ++ell) {
    EigLevel lvl;
    lvl.level = ell;
    lvl.alpha = TropScalar(Rational(1, spec.q[ell - 1]));
    int block = spec.m[ell - 1] * spec.q[ell - 1];

    CMatrix phi = phi_matrix(spec, b, ell);
    std::vector<int> prev_idx;
    int prev_cells = 0;
    for (int g = 0; g < ell - 1; ++g) prev_cells += spec.m[g];
    for (int i = 0; i < prev_cells; ++i) prev_idx.push_back(i);

    CMatrix schur;
    try {
      schur = schur_complement(prev_idx, phi, cfg);
      lvl.r_invertible = true;
    } catch (const SingularBlockError&) {
      lvl.r_invertible = false;
      out.all_levels_resolved = false;
      out.levels.push_back(std::move(lvl));
      covered += block;
      continue;
    }

    CVector eigs = eigenvalues(schur);
    double cutoff =
        cfg.zero_eig_rel_tol * std::max(schur.frobenius_norm(), 1e-300);
    const int q = spec.q[ell - 1];
    int zero_groups = 0;
    for (const Complex& lambda : eigs) {
      if (std::abs(lambda) <= cutoff) {
        ++zero_groups;
        continue;
      }
      double mod = std::pow(std::abs(lambda), 1.0 / q);
      double arg = std::arg(lambda);
      for (int r = 0; r < q; ++r) {
        double phase = (arg + 2.0 * M_PI * r) / q;
        lvl.equivalents.push_back(Complex(mod * std::cos(phase),
                                          mod * std::sin(phase)));
      }
    }
    std::sort(lvl.equivalents.begin(), lvl.equivalents.end(), eigenvalue_less);
    lvl.t_invertible = (zero_groups == 0);
    if (!lvl.t_invertible) out.all_levels_resolved = false;
    lvl.omega_count = covered;
    lvl.small_o_count =
        n - covered - static_cast<int>(lvl.equivalents.size());
    out.levels.push_back(std::move(lvl));
    covered += block;
  }
  return out;
}

}  // namespace tropspec
