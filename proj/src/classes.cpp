#include "bei/classes.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei/field.hpp"
#include "bei/groebner.hpp"
#include "bei/invariants.hpp"

namespace bei {

namespace {

std::uint64_t vbit(int v) { return std::uint64_t{1} << (v - 1); }

std::uint64_t vset_mask(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= vbit(v);
  return m;
}

std::vector<int> degree_multiset(const Graph& g) {
  std::vector<int> d;
  for (int v = 1; v <= g.n(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

void add_clique_on(Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) g.add_edge(vs[i], vs[j]);
}

}  // namespace

ChordalityWitness chordality(const Graph& g) {
  ChordalityWitness w;
  const int n = g.n();
  // Lex-BFS: visit the unvisited vertex with the lexicographically largest
  // label, ties to the smallest vertex; labels collect visit stamps of
  // earlier neighbors in decreasing order so plain vector comparison works.
  std::vector<std::vector<int>> label(n + 1);
  std::vector<char> seen(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (seen[v]) continue;
      if (best == -1 || label[v] > label[best]) best = v;
    }
    seen[best] = 1;
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!seen[u]) label[u].push_back(n - step);
  }
  // A graph is chordal iff the reverse visit order is a perfect elimination
  // order; verify via the parent check.
  std::vector<int> peo(order.rbegin(), order.rend());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = peo[i];
    std::uint64_t later = 0;
    int parent = -1;
    for (int u : g.neighbors(v)) {
      if (pos[u] <= i) continue;
      later |= vbit(u);
      if (parent == -1 || pos[u] < pos[parent]) parent = u;
    }
    if (parent == -1) continue;
    if ((later & ~vbit(parent) & ~g.nbr_mask(parent)) != 0) return w;
  }
  w.chordal = true;
  w.peo = std::move(peo);
  return w;
}

bool is_chordal(const Graph& g) { return chordality(g).chordal; }

std::optional<std::vector<std::vector<int>>> leaf_order(const Graph& g) {
  const CliqueSet cs = maximal_cliques(g);
  const int s = static_cast<int>(cs.cliques.size());
  if (s == 0) return std::vector<std::vector<int>>{};
  std::vector<std::uint64_t> fac;
  fac.reserve(s);
  for (const auto& c : cs.cliques) fac.push_back(vset_mask(c));
  std::vector<int> alive(s);
  for (int i = 0; i < s; ++i) alive[i] = i;
  std::vector<int> removed;
  while (alive.size() > 1) {
    int leaf = -1;
    for (int f : alive) {
      // f is a leaf when some other facet b dominates every intersection
      // of f with the rest of the complex
      bool is_leaf = false;
      for (int b : alive) {
        if (b == f) continue;
        const std::uint64_t cap = fac[f] & fac[b];
        bool dominates = true;
        for (int h : alive) {
          if (h == f) continue;
          if ((fac[f] & fac[h] & ~cap) != 0) {
            dominates = false;
            break;
          }
        }
        if (dominates) {
          is_leaf = true;
          break;
        }
      }
      if (is_leaf) {
        leaf = f;
        break;
      }
    }
    if (leaf == -1) return std::nullopt;
    removed.push_back(leaf);
    alive.erase(std::find(alive.begin(), alive.end(), leaf));
  }
  std::vector<std::vector<int>> out;
  out.push_back(cs.cliques[alive.front()]);
  for (auto it = removed.rbegin(); it != removed.rend(); ++it)
    out.push_back(cs.cliques[*it]);
  return out;
}

bool is_quasi_forest(const Graph& g) { return leaf_order(g).has_value(); }

bool is_quasi_tree(const Graph& g) {
  return is_connected(g) && is_quasi_forest(g);
}

bool is_closed_labeling(const Graph& g) {
  const Fp fld(kDefaultPrime);
  const Ring ring = make_ring(g.n(), OrderKind::lex);
  const auto gens = binomial_edge_generators(fld, ring, g);
  return is_groebner(fld, gens);
}

bool closed_labeling_condition(const Graph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    const std::uint64_t below = vbit(v) - 1;
    if (!is_clique(g, g.nbr_mask(v) & below)) return false;
    if (!is_clique(g, g.nbr_mask(v) & ~below & ~vbit(v))) return false;
  }
  return true;
}

Graph apply_labeling(const Graph& g, const std::vector<int>& new_label) {
  const int n = g.n();
  if (static_cast<int>(new_label.size()) != n)
    throw std::invalid_argument("labeling size does not match the graph");
  std::vector<char> hit(n + 1, 0);
  for (int l : new_label) {
    if (l < 1 || l > n || hit[l])
      throw std::invalid_argument("labeling is not a permutation of 1..n");
    hit[l] = 1;
  }
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(new_label[u - 1], new_label[v - 1]);
  return h;
}

std::optional<std::vector<int>> exists_closed_labeling(const Graph& g) {
  const int n = g.n();
  if (n > 8)
    throw std::invalid_argument(
        "closed labeling search supports at most 8 vertices");
  // Assign new labels 1..n one at a time.  Vertices labeled so far are
  // exactly the ones below the next label, so both clique conditions can be
  // checked incrementally: the already-labeled neighbors of the new vertex
  // must be pairwise adjacent, and the new vertex must be adjacent to every
  // previously recorded larger-labeled neighbor of each labeled neighbor.
  std::vector<int> newlab(n + 1, 0), owner(n + 1, 0);
  std::vector<std::uint64_t> up(n + 1, 0);
  std::uint64_t used = 0;
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k > n) return true;
    for (int w = 1; w <= n; ++w) {
      if (used & vbit(w)) continue;
      const std::uint64_t labeled_nbrs = g.nbr_mask(w) & used;
      if (!is_clique(g, labeled_nbrs)) continue;
      bool ok = true;
      for (int u = 1; u <= n && ok; ++u)
        if ((labeled_nbrs & vbit(u)) && (up[u] & ~g.nbr_mask(w))) ok = false;
      if (!ok) continue;
      used |= vbit(w);
      newlab[w] = k;
      for (int u = 1; u <= n; ++u)
        if (labeled_nbrs & vbit(u)) up[u] |= vbit(w);
      if (place(k + 1)) return true;
      used &= ~vbit(w);
      newlab[w] = 0;
      for (int u = 1; u <= n; ++u)
        if (labeled_nbrs & vbit(u)) up[u] &= ~vbit(w);
    }
    return false;
  };
  if (!place(1)) return std::nullopt;
  std::vector<int> out(newlab.begin() + 1, newlab.end());
  if (!is_closed_labeling(apply_labeling(g, out)))
    throw std::logic_error(
        "labeling search accepted a labeling the Groebner check rejects");
  return out;
}

IntervalSpec make_interval_spec(std::vector<int> cuts) {
  if (cuts.size() < 2)
    throw std::invalid_argument("interval spec needs at least two cut points");
  if (cuts.front() != 1)
    throw std::invalid_argument("interval spec must start at 1");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1])
      throw std::invalid_argument(
          "interval cut points must be strictly increasing");
  return IntervalSpec{std::move(cuts)};
}

Graph cm_closed_graph(const IntervalSpec& spec) {
  Graph g(spec.m());
  for (int i = 0; i < spec.s(); ++i)
    for (int u = spec.cuts[i]; u <= spec.cuts[i + 1]; ++u)
      for (int v = u + 1; v <= spec.cuts[i + 1]; ++v)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph quasi_cycle(const IntervalSpec& spec) {
  if (spec.s() < 2)
    throw std::invalid_argument(
        "a quasi-cycle needs at least two interval facets");
  Graph g = cm_closed_graph(spec);
  g.add_edge(1, spec.m());
  return g;
}

Graph semi_cycle(const IntervalSpec& spec, int n) {
  if (n < spec.m())
    throw std::invalid_argument(
        "a semi-cycle needs at least as many vertices as its interval part");
  Graph g(n);
  const Graph h = cm_closed_graph(spec);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  std::vector<int> last{1};
  for (int v = spec.m(); v <= n; ++v) last.push_back(v);
  add_clique_on(g, last);
  return g;
}

bool is_quasi_cycle(const Graph& b) {
  const int n = b.n();
  if (n > 10)
    throw std::invalid_argument(
        "quasi-cycle recognition supports at most 10 vertices");
  if (n < 3) return false;
  const auto deg = degree_multiset(b);
  const int interior = n - 2;
  for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << interior); ++sub) {
    std::vector<int> cuts{1};
    for (int i = 0; i < interior; ++i)
      if (sub >> i & 1) cuts.push_back(i + 2);
    cuts.push_back(n);
    const Graph q = quasi_cycle(make_interval_spec(std::move(cuts)));
    if (q.edge_count() != b.edge_count()) continue;
    if (degree_multiset(q) != deg) continue;
    if (isomorphic(q, b)) return true;
  }
  return false;
}

bool is_semi_cycle(const Graph& b) {
  const int n = b.n();
  if (n > 10)
    throw std::invalid_argument(
        "semi-cycle recognition supports at most 10 vertices");
  if (n < 2) return false;
  const auto deg = degree_multiset(b);
  for (int m = 2; m <= n; ++m) {
    const int interior = m - 2;
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << interior); ++sub) {
      std::vector<int> cuts{1};
      for (int i = 0; i < interior; ++i)
        if (sub >> i & 1) cuts.push_back(i + 2);
      cuts.push_back(m);
      const Graph q = semi_cycle(make_interval_spec(std::move(cuts)), n);
      if (q.edge_count() != b.edge_count()) continue;
      if (degree_multiset(q) != deg) continue;
      if (isomorphic(q, b)) return true;
    }
  }
  return false;
}

bool is_block_graph(const Graph& g) {
  for (const auto& blk : block_decomposition(g).blocks)
    if (!is_clique(g, vset_mask(blk))) return false;
  return true;
}

std::vector<std::vector<int>> quasi_blocks(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& blk : block_decomposition(g).blocks) {
    if (is_clique(g, vset_mask(blk))) continue;
    if (is_quasi_cycle(induced_subgraph(g, blk).graph)) out.push_back(blk);
  }
  return out;
}

int qc(const Graph& g) { return static_cast<int>(quasi_blocks(g).size()); }

bool is_quasi_block_graph(const Graph& g) {
  const auto bd = block_decomposition(g);
  std::vector<std::vector<int>> qbs;
  for (const auto& blk : bd.blocks) {
    if (is_clique(g, vset_mask(blk))) continue;
    if (!is_quasi_cycle(induced_subgraph(g, blk).graph)) return false;
    qbs.push_back(blk);
  }
  // Mark vertices internal in at least one block, each block taken as an
  // induced subgraph.
  std::vector<char> internal_somewhere(g.n() + 1, 0);
  for (const auto& blk : bd.blocks) {
    const auto sub = induced_subgraph(g, blk);
    for (int i = 1; i <= sub.graph.n(); ++i)
      if (!is_free_vertex(sub.graph, i)) internal_somewhere[sub.labels[i - 1]] = 1;
  }
  // Neighbors outside a quasi-block of its internal vertices must be
  // internal in no block.
  for (const auto& blk : qbs) {
    const std::uint64_t bm = vset_mask(blk);
    const auto sub = induced_subgraph(g, blk);
    for (int i = 1; i <= sub.graph.n(); ++i) {
      if (is_free_vertex(sub.graph, i)) continue;
      const int v = sub.labels[i - 1];
      for (int u : g.neighbors(v))
        if (!(bm & vbit(u)) && internal_somewhere[u]) return false;
    }
  }
  return true;
}

bool is_semi_block_graph(const Graph& g) {
  int noncliques = 0;
  Graph odd;
  for (const auto& blk : block_decomposition(g).blocks) {
    if (is_clique(g, vset_mask(blk))) continue;
    if (++noncliques > 1) return false;
    odd = induced_subgraph(g, blk).graph;
  }
  return noncliques == 1 && is_semi_cycle(odd);
}

Graph jahangir(int m, int n) {
  if (m < 1 || n < 3) throw std::invalid_argument("jahangir needs m >= 1, n >= 3");
  const int ring = m * n;
  Graph g(ring + 1);
  for (int v = 1; v < ring; ++v) g.add_edge(v, v + 1);
  g.add_edge(ring, 1);
  for (int i = 0; i < n; ++i) g.add_edge(m * i + 1, ring + 1);
  return g;
}

Graph wheel(int n) { return jahangir(1, n); }

Graph flower(int h, int k) {
  if (h < 0 || k < 0 || h + k < 3)
    throw std::invalid_argument("a flower needs h + k >= 3 petals");
  Graph g(1 + 2 * h + 3 * k);
  int next = 2;
  for (int i = 0; i < h; ++i) {
    const int a = next++, b = next++;
    g.add_edge(1, a);
    g.add_edge(1, b);
    g.add_edge(a, b);
  }
  for (int i = 0; i < k; ++i) {
    const int c = next++, d = next++, e = next++;
    g.add_edge(1, c);
    g.add_edge(c, d);
    g.add_edge(c, e);
  }
  return g;
}

namespace {

struct Split {
  int v = 0;
  std::vector<int> side1, side2;
};

// Split the connected graph on vs (original labels) at a vertex whose
// neighborhood restricted to either side is a clique; smallest vertex and
// smallest first side win.
std::optional<Split> find_split(const Graph& g, const std::vector<int>& vs) {
  const std::uint64_t all = vset_mask(vs);
  const auto sub = induced_subgraph(g, vs);
  for (int v : vs) {
    int vi = 0;
    for (int i = 0; i < sub.graph.n(); ++i)
      if (sub.labels[i] == v) vi = i + 1;
    const auto rel = delete_vertex(sub.graph, vi);
    const auto comps = connected_components(rel.graph);
    if (comps.size() < 2) continue;
    for (const auto& comp : comps) {
      std::uint64_t cm = 0;
      for (int w : comp) cm |= vbit(sub.labels[rel.labels[w - 1] - 1]);
      const std::uint64_t rest = all & ~cm & ~vbit(v);
      if (!is_clique(g, g.nbr_mask(v) & cm)) continue;
      if (!is_clique(g, g.nbr_mask(v) & rest)) continue;
      Split sp;
      sp.v = v;
      for (int w : vs) {
        if (cm & vbit(w)) sp.side1.push_back(w);
        if (rest & vbit(w)) sp.side2.push_back(w);
      }
      sp.side1.push_back(v);
      sp.side2.push_back(v);
      std::sort(sp.side1.begin(), sp.side1.end());
      std::sort(sp.side2.begin(), sp.side2.end());
      return sp;
    }
  }
  return std::nullopt;
}

}  // namespace

Decomposition decompose_indecomposable(const Graph& g) {
  Decomposition out;
  std::function<void(const std::vector<int>&)> rec =
      [&](const std::vector<int>& vs) {
        if (vs.size() >= 3) {
          if (auto sp = find_split(g, vs)) {
            out.glue_vertices.push_back(sp->v);
            rec(sp->side1);
            rec(sp->side2);
            return;
          }
        }
        out.parts.push_back(vs);
      };
  for (const auto& comp : connected_components(g)) rec(comp);
  std::sort(out.parts.begin(), out.parts.end());
  std::sort(out.glue_vertices.begin(), out.glue_vertices.end());
  return out;
}

bool is_indecomposable(const Graph& g) {
  if (!is_connected(g)) return false;
  std::vector<int> vs(g.n());
  for (int v = 1; v <= g.n(); ++v) vs[v - 1] = v;
  return g.n() < 3 || !find_split(g, vs).has_value();
}

}  // namespace bei
