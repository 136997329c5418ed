#include "bei/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bei {

namespace {
constexpr int kMaxGraphVerts = 64;

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }
}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0 || n > kMaxGraphVerts)
    throw std::invalid_argument("graph size out of range: " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in 1.." +
                            std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u - 1] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u - 1] |= bit(v);
  adj_[v - 1] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u - 1] &= ~bit(v);
  adj_[v - 1] &= ~bit(u);
}

std::uint64_t Graph::nbr_mask(int v) const {
  check_vertex(v);
  return adj_[v - 1];
}

std::vector<int> Graph::neighbors(int v) const {
  std::uint64_t m = nbr_mask(v);
  std::vector<int> out;
  while (m) {
    int k = std::countr_zero(m);
    out.push_back(k + 1);
    m &= m - 1;
  }
  return out;
}

int Graph::degree(int v) const { return std::popcount(nbr_mask(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    std::uint64_t m = adj_[u - 1] >> u;  // neighbors > u
    while (m) {
      int v = u + 1 + std::countr_zero(m);
      out.emplace_back(u, v);
      m &= m - 1;
    }
  }
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t m : adj_) twice += std::popcount(m);
  return twice / 2;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Relabeled induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> labels = verts;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int v : labels) g.check_vertex(v);
  Graph h(static_cast<int>(labels.size()));
  for (int i = 0; i < h.n(); ++i)
    for (int j = i + 1; j < h.n(); ++j)
      if (g.has_edge(labels[i], labels[j])) h.add_edge(i + 1, j + 1);
  return {std::move(h), std::move(labels)};
}

Relabeled delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<int> keep;
  for (int u = 1; u <= g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} not present");
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

Graph neighborhood_completion(const Graph& g, int v) {
  Graph h = g;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) h.add_edge(nb[i], nb[j]);
  return h;
}

Graph edge_completion(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw std::invalid_argument("edge endpoints must differ");
  if (g.has_edge(u, v))
    throw std::invalid_argument("edge {" + std::to_string(std::min(u, v)) + "," +
                                std::to_string(std::max(u, v)) +
                                "} already present");
  Graph h = g;
  for (int w : {u, v}) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) h.add_edge(nb[i], nb[j]);
  }
  return h;
}

Graph graph_join(const Graph& a, const Graph& b) {
  Graph h(a.n() + b.n());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(a.n() + u, a.n() + v);
  for (int u = 1; u <= a.n(); ++u)
    for (int v = 1; v <= b.n(); ++v) h.add_edge(u, a.n() + v);
  return h;
}

Graph glue_at_free_vertices(const Graph& a, int va, const Graph& b, int vb) {
  if (!is_free_vertex(a, va))
    throw std::invalid_argument("vertex " + std::to_string(va) +
                                " is not free in the first graph");
  if (!is_free_vertex(b, vb))
    throw std::invalid_argument("vertex " + std::to_string(vb) +
                                " is not free in the second graph");
  Graph h(a.n() + b.n() - 1);
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  std::vector<int> map_b(b.n() + 1, 0);
  map_b[vb] = va;
  int next = a.n() + 1;
  for (int u = 1; u <= b.n(); ++u)
    if (u != vb) map_b[u] = next++;
  for (auto [u, v] : b.edges()) h.add_edge(map_b[u], map_b[v]);
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::uint64_t seen = 0;
  for (int s = 1; s <= g.n(); ++s) {
    if (seen & bit(s)) continue;
    std::uint64_t comp = bit(s), frontier = bit(s);
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t m = frontier;
      while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        next |= g.nbr_mask(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> verts;
    while (comp) {
      verts.push_back(std::countr_zero(comp) + 1);
      comp &= comp - 1;
    }
    comps.push_back(std::move(verts));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, std::uint64_t mask) {
  std::uint64_t m = mask;
  while (m) {
    int v = std::countr_zero(m) + 1;
    m &= m - 1;
    if ((g.nbr_mask(v) & mask) != (mask & ~bit(v))) return false;
  }
  return true;
}

bool is_free_vertex(const Graph& g, int v) {
  return is_clique(g, g.nbr_mask(v));
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
  return g;
}

Graph parse_adjacency_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw std::invalid_argument("adjacency text: missing vertex count");
  Graph g(n);
  int u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("adjacency text: dangling endpoint");
    g.add_edge(u, v);
  }
  return g;
}

std::string to_adjacency_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  if (s[0] == '~') throw std::invalid_argument("graph6: long form (n > 62) unsupported");
  int n = s[0] - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad size byte");
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: wrong length for n=" + std::to_string(n));
  int pos = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, ++pos) {
      int c = s[1 + pos / 6] - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: byte out of range");
      if ((c >> (5 - pos % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  if (g.n() > 62) throw std::invalid_argument("graph6: n > 62 unsupported");
  std::string s(1, static_cast<char>(g.n() + 63));
  int nbits = g.n() * (g.n() - 1) / 2;
  std::string bytes((nbits + 5) / 6, 0);
  int pos = 0;
  for (int j = 2; j <= g.n(); ++j)
    for (int i = 1; i < j; ++i, ++pos)
      if (g.has_edge(i, j)) bytes[pos / 6] |= static_cast<char>(1 << (5 - pos % 6));
  for (char& c : bytes) c = static_cast<char>(c + 63);
  return s + bytes;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw std::invalid_argument(path + ": empty graph file");
  if (std::isdigit(static_cast<unsigned char>(text[i])))
    return parse_adjacency_text(text);
  std::size_t end = text.find_first_of("\r\n", i);
  return parse_graph6(text.substr(i, end == std::string::npos ? end : end - i));
}

namespace {

// Backtracking isomorphism: map vertices of a (highest degree first) onto
// like-degree vertices of b, checking adjacency against the mapped prefix.
bool extend_iso(const Graph& a, const Graph& b, const std::vector<int>& order,
                std::size_t k, std::vector<int>& img, std::uint64_t used) {
  if (k == order.size()) return true;
  int u = order[k];
  for (int w = 1; w <= b.n(); ++w) {
    if (used & bit(w)) continue;
    if (a.degree(u) != b.degree(w)) continue;
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t)
      if (a.has_edge(u, order[t]) != b.has_edge(w, img[order[t]])) ok = false;
    if (!ok) continue;
    img[u] = w;
    if (extend_iso(a, b, order, k + 1, img, used | bit(w))) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  if (a.n() > 10) throw std::invalid_argument("isomorphism check capped at n <= 10");
  std::vector<int> da, db;
  for (int v = 1; v <= a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 1; v <= b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> order(a.n());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return a.degree(u) > a.degree(v); });
  std::vector<int> img(a.n() + 1, 0);
  return extend_iso(a, b, order, 0, img, 0);
}

namespace {

// Canonical form: minimize the graph6 bit sequence (columns (.,2),(.,3),...)
// over all relabelings.  Branch and bound on one column at a time; `best`
// holds the smallest complete bit sequence found so far, seeded by the
// identity and refreshed whenever a prefix strictly improves on it.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint8_t> best;   // n(n-1)/2 bits
  std::vector<int> perm;            // perm[k] = old vertex at new position k+1

  explicit CanonSearch(const Graph& gr) : g(gr), n(gr.n()) {
    best.reserve(n * (n - 1) / 2);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) best.push_back(g.has_edge(i, j) ? 1 : 0);
    perm.assign(n, 0);
  }

  void run() {
    std::uint64_t used = 0;
    descend(0, 0, used);
  }

  void descend(int k, int pos, std::uint64_t& used) {
    if (k == n) return;  // prefix equals best all the way: best already right
    for (int w = 1; w <= n; ++w) {
      if (used & bit(w)) continue;
      // column bits: adjacency of w against new positions 1..k
      int cmp = 0;  // -1 better, 0 tie, +1 worse
      std::array<std::uint8_t, 64> col{};
      for (int i = 0; i < k; ++i) {
        col[i] = g.has_edge(perm[i], w) ? 1 : 0;
        if (cmp == 0 && col[i] != best[pos + i]) cmp = col[i] < best[pos + i] ? -1 : 1;
      }
      if (cmp > 0) continue;
      if (cmp < 0) {  // strictly better prefix: pull best down to it
        for (int i = 0; i < k; ++i) best[pos + i] = col[i];
        for (std::size_t t = pos + k; t < best.size(); ++t) best[t] = 1;
      }
      perm[k] = w;
      used |= bit(w);
      descend(k + 1, pos + k, used);
      used &= ~bit(w);
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.n() > 10) throw std::invalid_argument("canonical form capped at n <= 10");
  if (g.n() <= 1) return g;
  CanonSearch cs(g);
  cs.run();
  Graph h(g.n());
  int pos = 0;
  for (int j = 2; j <= g.n(); ++j)
    for (int i = 1; i < j; ++i, ++pos)
      if (cs.best[pos]) h.add_edge(i, j);
  return h;
}

std::string canonical_key(const Graph& g) {
  if (g.n() <= 10) return "c:" + to_graph6(canonical_form(g));
  return "l:" + to_graph6(g);
}

}  // namespace bei
