#include "bei/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace bei {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

std::vector<int> mask_to_verts(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Bron-Kerbosch with pivot: u in P|X maximizing |P & N(u)|, smallest label
// on ties; branch vertices scanned in ascending label order.
void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::vector<int>>& out) {
  if (!p && !x) {
    out.push_back(mask_to_verts(r));
    return;
  }
  int pivot = 0, best = -1;
  std::uint64_t px = p | x;
  while (px) {
    int u = std::countr_zero(px) + 1;
    px &= px - 1;
    int score = std::popcount(p & g.nbr_mask(u));
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  std::uint64_t cand = p & ~g.nbr_mask(pivot);
  while (cand) {
    int v = std::countr_zero(cand) + 1;
    cand &= cand - 1;
    bron_kerbosch(g, r | bit(v), p & g.nbr_mask(v), x & g.nbr_mask(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

CliqueSet maximal_cliques(const Graph& g) {
  CliqueSet cs;
  if (g.n() == 0) return cs;
  std::uint64_t all = (g.n() == 64) ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << g.n()) - 1;
  bron_kerbosch(g, 0, all, 0, cs.cliques);
  std::sort(cs.cliques.begin(), cs.cliques.end());
  return cs;
}

int clique_count(const Graph& g) {
  return static_cast<int>(maximal_cliques(g).cliques.size());
}

int clique_number(const Graph& g) {
  int w = 0;
  for (const auto& c : maximal_cliques(g).cliques)
    w = std::max(w, static_cast<int>(c.size()));
  return w;
}

std::vector<int> free_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v)
    if (is_free_vertex(g, v)) out.push_back(v);
  return out;
}

std::vector<int> internal_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v)
    if (!is_free_vertex(g, v)) out.push_back(v);
  return out;
}

int iv(const Graph& g) { return static_cast<int>(internal_vertices(g).size()); }

int cdeg(const Graph& g, int v) {
  g.check_vertex(v);
  int k = 0;
  for (const auto& c : maximal_cliques(g).cliques)
    if (std::binary_search(c.begin(), c.end(), v)) ++k;
  return k;
}

namespace {

// Grow induced paths: the next vertex must see the tip and nothing else on
// the path, so anything adjacent to an interior vertex is permanently out.
void induced_path_dfs(const Graph& g, int last, std::uint64_t path,
                      std::uint64_t forbid, int edges, int& best) {
  best = std::max(best, edges);
  std::uint64_t cand = g.nbr_mask(last) & ~path & ~forbid;
  while (cand) {
    int v = std::countr_zero(cand) + 1;
    cand &= cand - 1;
    induced_path_dfs(g, v, path | bit(v), forbid | g.nbr_mask(last), edges + 1,
                     best);
  }
}

}  // namespace

int longest_induced_path(const Graph& g) {
  int best = 0;
  for (int s = 1; s <= g.n(); ++s)
    induced_path_dfs(g, s, bit(s), 0, 0, best);
  return best;
}

int vertex_connectivity(const Graph& g) {
  if (g.n() <= 1) return 0;
  if (!is_connected(g)) return 0;
  for (int k = 1; k <= g.n() - 2; ++k) {
    // all k-subsets as separator candidates
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      std::vector<int> rest;
      std::uint64_t cut = 0;
      for (int v : idx) cut |= bit(v);
      for (int v = 1; v <= g.n(); ++v)
        if (!(cut & bit(v))) rest.push_back(v);
      if (connected_components(induced_subgraph(g, rest).graph).size() > 1)
        return k;
      int i = k - 1;
      while (i >= 0 && idx[i] == g.n() - k + 1 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return g.n() - 1;  // no separator: complete graph
}

namespace {

// Hopcroft-Tarjan biconnected components over an explicit edge stack.
struct BlockFinder {
  const Graph& g;
  std::vector<int> num, low;
  int counter = 0;
  std::vector<std::pair<int, int>> estack;
  std::vector<std::uint64_t> block_masks;
  std::uint64_t cuts = 0;

  explicit BlockFinder(const Graph& gr)
      : g(gr), num(gr.n() + 1, 0), low(gr.n() + 1, 0) {}

  void pop_block(int u, int v) {
    std::uint64_t m = 0;
    while (true) {
      auto [a, b] = estack.back();
      estack.pop_back();
      m |= bit(a) | bit(b);
      if (a == u && b == v) break;
    }
    block_masks.push_back(m);
  }

  void dfs(int u, int parent) {
    num[u] = low[u] = ++counter;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) {
        parent = 0;  // skip the tree edge once; parallel edges don't exist
        continue;
      }
      if (!num[v]) {
        ++children;
        estack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          pop_block(u, v);
          if (num[u] > 1 || children > 1) cuts |= bit(u);
        }
      } else if (num[v] < num[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], num[v]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockFinder bf(g);
  for (int v = 1; v <= g.n(); ++v)
    if (!bf.num[v]) {
      bf.dfs(v, 0);
      if (g.degree(v) == 0) bf.block_masks.push_back(bit(v));
    }
  BlockDecomposition out;
  for (auto m : bf.block_masks) out.blocks.push_back(mask_to_verts(m));
  std::sort(out.blocks.begin(), out.blocks.end());
  out.cut_vertices = mask_to_verts(bf.cuts);
  for (const auto& b : out.blocks)
    if (b.size() == 2) out.bridges.emplace_back(b[0], b[1]);
  return out;
}

std::vector<int> cut_vertices(const Graph& g) {
  return block_decomposition(g).cut_vertices;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
  return block_decomposition(g).bridges;
}

}  // namespace bei
