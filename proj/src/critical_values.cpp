#include "tropspec/critical_values.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "tropspec/config.hpp"
#include "tropspec/tropical_core.hpp"

namespace tropspec {

std::vector<int> CriticalDecomposition::cumulative(int ell) const {
  std::vector<int> out;
  for (int m = 0; m < ell; ++m)
    out.insert(out.end(), classes[m].begin(), classes[m].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CriticalDecomposition::remaining(int ell) const {
  std::vector<int> covered = cumulative(ell - 1);
  std::vector<int> out;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < covered.size() && covered[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

void run_internal_checks(const CriticalDecomposition& dec, int ell) {
  const TropMatrix& ahat = dec.normalized[ell - 1];
  if (min_circuit_mean(ahat) != TropScalar::one())
    throw Error("internal: normalized matrix must have circuit mean 0");

  std::vector<int> crit = critical_nodes(ahat);
  if (crit != dec.cumulative(ell))
    throw Error("internal: critical nodes of A_hat_ell differ from C^ell");

  // A_ell = alpha_ell Schur(C^{ell-1}, A_hat_ell)
  TropMatrix expect = scalar_otimes(
      dec.alphas[ell - 1],
      trop_schur(dec.cumulative(ell - 1), TropScalar::one(), ahat));
  if (expect != dec.schur_matrices[ell - 1])
    throw Error("internal: Schur identity for A_ell failed");
}

}  // namespace

CriticalDecomposition critical_sequence(const TropMatrix& a) {
  if (!is_irreducible(a))
    throw ReducibleMatrixError("irreducible matrix required");
  const int n = a.n();
  CriticalDecomposition dec;
  dec.n = n;

  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  TropMatrix current = a;

  while (!labels.empty()) {
    TropScalar alpha = min_circuit_mean(current);
    if (!dec.alphas.empty() && !(dec.alphas.back() < alpha))
      throw Error("internal: critical values must strictly increase");

    std::vector<int> local_crit = critical_nodes(current);
    std::vector<int> cls;
    for (int p : local_crit) cls.push_back(labels[p]);

    dec.alphas.push_back(alpha);
    dec.classes.push_back(cls);
    dec.schur_matrices.push_back(current);
    dec.schur_labels.push_back(labels);

    int ell = static_cast<int>(dec.alphas.size());
    TropVector d(n);
    for (int m = 0; m < ell; ++m)
      for (int j : dec.classes[m]) d[j] = dec.alphas[m];
    for (int j : dec.remaining(ell))
      if (d[j].is_zero()) d[j] = alpha;
    dec.diag_exponents.push_back(d);

    TropMatrix ahat(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ahat.at(i, j) = sub(a.at(i, j), d[i]);
    dec.normalized.push_back(ahat);
    dec.crit_graphs.push_back(critical_graph(ahat));

    if (internal_checks_enabled()) run_internal_checks(dec, ell);

    if (static_cast<int>(cls.size()) == static_cast<int>(labels.size())) break;

    // positions of the class inside the current matrix
    std::vector<int> pos = local_crit;
    current = trop_schur(pos, alpha, current);
    std::vector<int> next;
    std::size_t p = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (p < pos.size() && static_cast<int>(i) == pos[p]) {
        ++p;
      } else {
        next.push_back(labels[i]);
      }
    }
    labels = std::move(next);
  }

  dec.k = static_cast<int>(dec.alphas.size());
  for (int ell = 0; ell < dec.k; ++ell)
    for (std::size_t i = 0; i < dec.classes[ell].size(); ++i)
      dec.beta.push_back(dec.alphas[ell]);
  return dec;
}

const Digraph& critical_graph_order(const CriticalDecomposition& dec,
                                    int ell) {
  if (ell < 1 || ell > dec.k) throw DimensionError("level out of range");
  return dec.crit_graphs[ell - 1];
}

namespace {

// Hopcroft-Karp maximum matching; left and right sides are both the node
// set of g, edges are the arcs.
int max_bipartite_matching(const Digraph& g) {
  const auto& nodes = g.nodes();
  const int n = static_cast<int>(nodes.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[nodes[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.arcs()) adj[pos[u]].push_back(pos[v]);

  const int kInf = 1 << 29;
  std::vector<int> match_l(n, -1), match_r(n, -1), dist(n);

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < n; ++u) {
      if (match_l[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  int matched = 0;
  while (bfs())
    for (int u = 0; u < n; ++u)
      if (match_l[u] == -1 && dfs(u)) ++matched;
  return matched;
}

}  // namespace

bool disjoint_circuit_cover(const Digraph& g) {
  if (g.nodes().empty()) return true;
  return max_bipartite_matching(g) == static_cast<int>(g.nodes().size());
}

GammaBetaReport gamma_equals_beta_blocks(const TropMatrix& a) {
  GammaBetaReport report;
  report.dec = critical_sequence(a);
  report.gamma = char_poly_roots(a);
  const auto& dec = report.dec;
  const auto& gamma = report.gamma;
  const auto& beta = dec.beta;

  auto prefix = [](const RootSequence& s, int m) {
    TropScalar p = TropScalar::one();
    for (int j = 0; j < m; ++j) p = otimes(p, s[j]);
    return p;
  };

  std::vector<bool> covers(dec.k + 1);
  covers[0] = true;  // the empty graph has a cover
  for (int ell = 1; ell <= dec.k; ++ell)
    covers[ell] = disjoint_circuit_cover(dec.crit_graphs[ell - 1]);

  report.gamma_equals_beta = (gamma == beta);
  for (int ell = 1; ell <= dec.k; ++ell) {
    GammaBetaLevel lvl;
    lvl.level = ell;
    lvl.covers = covers[ell - 1] && covers[ell];

    int lo = static_cast<int>(dec.cumulative(ell - 1).size());
    int hi = static_cast<int>(dec.cumulative(ell).size());
    bool equal = prefix(gamma, lo) == prefix(beta, lo);
    for (int j = lo; j < hi && equal; ++j) equal = (gamma[j] == beta[j]);
    lvl.block_equal = equal;

    if (lvl.covers != lvl.block_equal)
      throw Error("internal: cover condition and block equality disagree");
    if (lvl.covers) {
      // alpha_ell must be a characteristic root of multiplicity |C_ell|
      long mult = std::count(gamma.begin(), gamma.end(), dec.alphas[ell - 1]);
      if (mult != static_cast<long>(dec.classes[ell - 1].size()))
        throw Error("internal: critical value multiplicity mismatch");
    }
    report.levels.push_back(lvl);
  }
  return report;
}

}  // namespace tropspec
