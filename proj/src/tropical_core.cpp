#include "tropspec/tropical_core.hpp"

#include <algorithm>
#include <map>

namespace tropspec {

Digraph graph_of(const TropMatrix& a) {
  std::vector<int> nodes(a.n());
  for (int i = 0; i < a.n(); ++i) nodes[i] = i;
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (!a.at(i, j).is_zero()) arcs.emplace_back(i, j);
  return Digraph(std::move(nodes), std::move(arcs));
}

namespace {

struct Adjacency {
  std::vector<int> nodes;                  // sorted labels
  std::vector<std::vector<int>> out;       // positions into nodes
  std::map<int, int> pos;

  explicit Adjacency(const Digraph& g) : nodes(g.nodes()) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      pos[nodes[i]] = static_cast<int>(i);
    out.resize(nodes.size());
    for (const auto& [u, v] : g.arcs()) out[pos[u]].push_back(pos[v]);
  }
};

// Iterative Tarjan; components come out in reverse topological order and
// are re-sorted by smallest label afterwards.
std::vector<std::vector<int>> tarjan(const Adjacency& adj) {
  const int n = static_cast<int>(adj.nodes.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    std::size_t next_arc;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_arc < adj.out[f.v].size()) {
        int w = adj.out[f.v][f.next_arc++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(adj.nodes[w]);
            if (w == f.v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

}  // namespace

std::vector<std::vector<int>> sccs(const Digraph& g) {
  return tarjan(Adjacency(g));
}

std::vector<std::vector<int>> final_classes(const Digraph& g) {
  auto comps = sccs(g);
  const int k = static_cast<int>(comps.size());
  std::map<int, int> comp_of;
  for (int c = 0; c < k; ++c)
    for (int v : comps[c]) comp_of[v] = c;

  std::vector<std::vector<int>> cond(k);
  std::vector<bool> leaves(k, false);
  for (const auto& [u, v] : g.arcs()) {
    int cu = comp_of[u], cv = comp_of[v];
    if (cu != cv) {
      cond[cu].push_back(cv);
      leaves[cu] = true;
    }
  }

  // reachability over the condensation (node counts are small here)
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (int c = 0; c < k; ++c) {
    std::vector<int> queue{c};
    reach[c][c] = true;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y : cond[x])
        if (!reach[c][y]) {
          reach[c][y] = true;
          queue.push_back(y);
        }
    }
  }

  std::vector<std::vector<int>> result;
  for (int c = 0; c < k; ++c) {
    if (leaves[c]) continue;
    bool from_all = true;
    for (int d = 0; d < k && from_all; ++d) from_all = reach[d][c];
    if (from_all) result.push_back(comps[c]);
  }
  return result;
}

bool is_irreducible(const TropMatrix& a) {
  if (a.n() == 0) return false;
  return sccs(graph_of(a)).size() == 1;
}

namespace {

// Karp on a strongly connected matrix. Returns the semiring zero when no
// walk of full length exists (only possible for a single loop-free node).
TropScalar karp(const TropMatrix& a) {
  const int n = a.n();
  // d[k][v] = minimal weight of a k-arc walk from node 0 to v
  std::vector<TropVector> d(n + 1, TropVector(n, TropScalar::zero()));
  d[0][0] = TropScalar::one();
  for (int k = 1; k <= n; ++k)
    for (int j = 0; j < n; ++j) {
      TropScalar best = TropScalar::zero();
      for (int i = 0; i < n; ++i)
        best = oplus(best, otimes(d[k - 1][i], a.at(i, j)));
      d[k][j] = best;
    }

  bool found = false;
  TropScalar rho = TropScalar::zero();
  for (int v = 0; v < n; ++v) {
    if (d[n][v].is_zero()) continue;
    bool have_max = false;
    Rational vmax;
    for (int k = 0; k < n; ++k) {
      if (d[k][v].is_zero()) continue;
      Rational cand =
          (d[n][v].value() - d[k][v].value()) / Rational(n - k);
      if (!have_max || vmax < cand) {
        vmax = cand;
        have_max = true;
      }
    }
    if (!have_max) continue;
    TropScalar c{vmax};
    if (!found || c < rho) {
      rho = c;
      found = true;
    }
  }
  return found ? rho : TropScalar::zero();
}

}  // namespace

TropScalar min_circuit_mean(const TropMatrix& a) {
  if (a.n() == 0) throw DimensionError("empty matrix");
  if (!is_irreducible(a))
    throw ReducibleMatrixError("irreducible matrix required");
  TropScalar rho = karp(a);
  if (rho.is_zero()) throw NoCircuitError("matrix has no circuit");
  return rho;
}

TropScalar min_circuit_mean_any(const TropMatrix& a) {
  TropScalar best = TropScalar::zero();
  for (const auto& comp : sccs(graph_of(a))) {
    bool has_arc = false;
    for (int u : comp)
      for (int v : comp)
        if (!a.at(u, v).is_zero()) has_arc = true;
    if (!has_arc) continue;
    best = oplus(best, karp(a.submatrix(comp, comp)));
  }
  return best;
}

TropMatrix scalar_otimes(const TropScalar& lambda, const TropMatrix& a) {
  TropMatrix r(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) r.at(i, j) = otimes(lambda, a.at(i, j));
  return r;
}

TropMatrix kleene_star(const TropMatrix& a) {
  TropScalar rho = min_circuit_mean_any(a);
  if (rho < TropScalar::one())
    throw DivergentStarError("Kleene star diverges: negative circuit mean " +
                             rho.to_string());
  TropMatrix star = trop_plus_closure(a);
  for (int i = 0; i < a.n(); ++i)
    star.at(i, i) = oplus(star.at(i, i), TropScalar::one());
  return star;
}

namespace {

struct Spectral {
  TropScalar rho;
  TropMatrix normalized;  // rho^{-1} A
  TropMatrix star;        // normalized^*
  TropMatrix plus;        // normalized^+ (diagonal detects critical nodes)
};

Spectral spectral_data(const TropMatrix& a) {
  TropScalar rho = min_circuit_mean(a);
  TropMatrix normalized = scalar_otimes(rho.inverse(), a);
  TropMatrix plus = trop_plus_closure(normalized);
  TropMatrix star = plus;
  for (int i = 0; i < a.n(); ++i)
    star.at(i, i) = oplus(star.at(i, i), TropScalar::one());
  return {rho, std::move(normalized), std::move(star), std::move(plus)};
}

std::vector<int> critical_nodes_of(const Spectral& s) {
  std::vector<int> nodes;
  for (int i = 0; i < s.plus.n(); ++i)
    if (s.plus.at(i, i) == TropScalar::one()) nodes.push_back(i);
  return nodes;
}

TropVector column(const TropMatrix& m, int j) {
  TropVector v(m.n());
  for (int i = 0; i < m.n(); ++i) v[i] = m.at(i, j);
  return v;
}

Digraph critical_graph_of(const Spectral& s) {
  std::vector<int> crit = critical_nodes_of(s);
  if (crit.empty()) throw NoCircuitError("matrix has no circuit");
  TropVector v = column(s.star, crit.front());
  Digraph sat = saturation_graph(s.normalized, v);
  Digraph result;
  for (const auto& comp : sccs(sat)) {
    bool cyclic = comp.size() > 1 ||
                  (comp.size() == 1 && sat.has_arc(comp[0], comp[0]));
    if (!cyclic) continue;
    for (int u : comp) result.add_node(u);
    for (int u : comp)
      for (int w : comp)
        if (sat.has_arc(u, w)) result.add_arc(u, w);
  }
  return result;
}

}  // namespace

std::vector<int> critical_nodes(const TropMatrix& a) {
  return critical_nodes_of(spectral_data(a));
}

Digraph critical_graph(const TropMatrix& a) {
  return critical_graph_of(spectral_data(a));
}

std::vector<std::vector<int>> critical_classes(const TropMatrix& a) {
  return sccs(critical_graph(a));
}

Digraph saturation_graph(const TropMatrix& a, const TropVector& v) {
  TropVector av = trop_matvec(a, v);
  for (int i = 0; i < a.n(); ++i)
    if (av[i].is_zero())
      throw Error("saturation graph undefined: row " + std::to_string(i) +
                  " of A v is the semiring zero");
  std::vector<int> nodes(a.n());
  for (int i = 0; i < a.n(); ++i) nodes[i] = i;
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      TropScalar w = otimes(a.at(i, j), v[j]);
      if (!w.is_zero() && w == av[i]) arcs.emplace_back(i, j);
    }
  return Digraph(std::move(nodes), std::move(arcs));
}

std::vector<TropVector> trop_eigenvectors(const TropMatrix& a) {
  Spectral s = spectral_data(a);
  Digraph crit = critical_graph_of(s);
  std::vector<TropVector> gens;
  for (const auto& comp : sccs(crit)) {
    TropVector v = column(s.star, comp.front());
    TropVector av = trop_matvec(a, v);
    for (int i = 0; i < a.n(); ++i)
      if (av[i] != otimes(s.rho, v[i]))
        throw Error("internal: generator fails the eigenvector identity");
    gens.push_back(std::move(v));
  }
  return gens;
}

TropMatrix trop_schur(const std::vector<int>& c, const TropScalar& lambda,
                      const TropMatrix& a) {
  const int n = a.n();
  std::vector<bool> in_c(n, false);
  for (int i : c) {
    if (i < 0 || i >= n) throw DimensionError("Schur index out of range");
    if (in_c[i]) throw DimensionError("Schur index repeated");
    in_c[i] = true;
  }
  if (c.empty()) return a;
  if (static_cast<int>(c.size()) == n)
    throw DimensionError("Schur complement of the full index set");
  if (lambda.is_zero()) throw Error("Schur normalization must be finite");

  std::vector<int> cs(c);
  std::sort(cs.begin(), cs.end());
  std::vector<int> ns;
  for (int i = 0; i < n; ++i)
    if (!in_c[i]) ns.push_back(i);

  TropMatrix acc = scalar_otimes(lambda.inverse(), a.submatrix(cs, cs));
  if (min_circuit_mean_any(acc) < TropScalar::one())
    throw DivergentStarError(
        "Schur complement undefined: rho_min(A_CC) < lambda");
  TropMatrix star = kleene_star(acc);

  const int m = static_cast<int>(ns.size());
  const int k = static_cast<int>(cs.size());
  TropMatrix result(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      TropScalar best = a.at(ns[i], ns[j]);
      for (int p = 0; p < k; ++p) {
        if (a.at(ns[i], cs[p]).is_zero()) continue;
        for (int q = 0; q < k; ++q) {
          TropScalar through =
              otimes(a.at(ns[i], cs[p]),
                     otimes(star.at(p, q),
                            otimes(lambda.inverse(), a.at(cs[q], ns[j]))));
          best = oplus(best, through);
        }
      }
      result.at(i, j) = best;
    }
  return result;
}

}  // namespace tropspec
