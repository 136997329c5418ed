#include "bei/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bei/classes.hpp"
#include "bei/invariants.hpp"

namespace bei {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// max degree <= 2 plus tree edge count: a path, label-independently.
bool is_path_shape(const Graph& g) {
  if (g.n() == 0) return false;
  if (!is_connected(g) || g.edge_count() != g.n() - 1) return false;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

std::string classify(const Graph& g) {
  if (is_chordal(g)) return "chordal";
  try {
    if (is_quasi_block_graph(g)) return "quasi-block";
    if (is_semi_block_graph(g)) return "semi-block";
  } catch (const std::invalid_argument&) {
    return "unclassified";  // a block exceeds the recognizer scale
  }
  return "other";
}

std::string betti_compact(const BettiTable& t) {
  std::string s;
  for (const auto& [ij, v] : t.entries) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
         "):" + std::to_string(v);
  }
  return s;
}

CheckResult run_check(const std::string& name, const Graph& g,
                      const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.graph_key = canonical_key(g);
  r.check = name;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const BudgetExceeded& e) {
    r.status = CheckStatus::envelope_exceeded;
    r.witness.emplace_back("envelope", e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  r.runtime_ms = std::round(ms * 1000.0) / 1000.0;
  return r;
}

void hold_iff(CheckResult& r, bool ok) {
  r.status = ok ? CheckStatus::holds : CheckStatus::violated;
}

}  // namespace

GroebnerBasis<Fp> groebner_of(const Graph& g, std::uint32_t prime,
                              OrderKind kind) {
  Fp fld(prime);
  auto ring = make_ring(g.n(), kind, prime);
  return buchberger(fld, binomial_edge_ideal(fld, ring, g));
}

std::function<bool()> make_stop(const Budget& b) {
  if (b.budget_seconds <= 0) return {};
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(b.budget_seconds));
  return [deadline] { return std::chrono::steady_clock::now() > deadline; };
}

HilbertSeries h_polynomial(const Graph& g, std::uint32_t prime) {
  return hilbert_series(groebner_of(g, prime));
}

HilbertSeries h_polynomial(const Graph& g, const Budget& budget) {
  return hilbert_series(groebner_of(g, budget.prime), make_stop(budget));
}

int deg_h(const Graph& g, std::uint32_t prime) {
  return h_degree(h_polynomial(g, prime));
}

long hilbert_function(const Graph& g, int k, std::uint32_t prime) {
  return hilbert_function(groebner_of(g, prime), k);
}

BettiTable graded_betti(const Graph& g, BettiStrategy strategy,
                        const Budget& budget, int koszul_strand) {
  Fp fld(budget.prime);
  auto gb = groebner_of(g, budget.prime);
  if (gb.elems.empty()) {  // J_G = 0: the module is the ring itself
    BettiTable t;
    t.set(0, 0, 1);
    return t;
  }
  const auto stop = make_stop(budget);
  if (strategy == BettiStrategy::resolution)
    return betti_resolution(fld, gb, budget.max_generators, stop);
  int cap = koszul_strand;
  if (cap < 0)
    cap = betti_resolution(fld, gb, budget.max_generators, stop).reg();
  return betti_koszul(fld, gb, cap, budget.max_entries, stop);
}

int regularity(const Graph& g, const Budget& budget) {
  return graded_betti(g, BettiStrategy::resolution, budget).reg();
}

int projective_dimension(const Graph& g, const Budget& budget) {
  return graded_betti(g, BettiStrategy::resolution, budget).pd();
}

int depth(const Graph& g, const Budget& budget) {
  return 2 * g.n() - projective_dimension(g, budget);
}

bool alternating_sum_check(const Graph& g, const Budget& budget) {
  const auto table = graded_betti(g, BettiStrategy::resolution, budget);
  const auto series = h_polynomial(g, budget);
  return betti_matches_numerator(table, series.numerator);
}

bool unique_extremal_identity_check(const Graph& g, const Budget& budget) {
  const auto table = graded_betti(g, BettiStrategy::resolution, budget);
  if (!is_unique_extremal(table)) return true;  // hypothesis empty
  const auto series = h_polynomial(g, budget);
  return table.pd() + table.reg() ==
         2 * g.n() - series.dim + h_degree(series);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected-graph enumeration covers 1 <= n <= 7");
  static std::map<int, std::vector<Graph>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1);
  } else {
    // every connected graph arises from one on n-1 vertices by attaching a
    // new vertex (delete any non-cut vertex to see it), so extending the
    // class representatives by all nonempty neighborhoods is exhaustive
    std::map<std::string, Graph> seen;
    for (const Graph& h : enumerate_connected_graphs(n - 1))
      for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
        Graph g(n);
        for (auto [u, v] : h.edges()) g.add_edge(u, v);
        for (int v = 1; v < n; ++v)
          if (s & (1u << (v - 1))) g.add_edge(v, n);
        Graph c = canonical_form(g);
        seen.emplace(to_graph6(c), std::move(c));
      }
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
  }
  static const std::size_t counts[8] = {0, 1, 1, 2, 6, 21, 112, 853};
  if (out.size() != counts[n])
    throw std::logic_error("enumeration self-check failed at n = " +
                           std::to_string(n) + ": got " +
                           std::to_string(out.size()) + ", expected " +
                           std::to_string(counts[n]));
  memo[n] = out;
  return out;
}

Graph counterexample_graph() {
  static const int edges[17][2] = {
      {1, 2},  {1, 3},  {2, 3},  {1, 4},  {1, 5},   {4, 5},
      {1, 6},  {1, 7},  {6, 7},  {2, 10}, {2, 11},  {10, 11},
      {2, 12}, {2, 13}, {12, 13}, {3, 8},  {3, 9}};
  Graph g(13);
  for (const auto& e : edges) g.add_edge(e[0], e[1]);
  return g;
}

Graph glued_counterexample(int k) {
  if (k < 1) throw std::invalid_argument("need at least one copy");
  Graph acc = counterexample_graph();
  int attach = 8;  // pendant neighbor of 3, free in every partial chain
  for (int c = 1; c < k; ++c) {
    const int prev_n = acc.n();
    acc = glue_at_free_vertices(acc, attach, counterexample_graph(), 9);
    attach = prev_n + 8;  // vertex 8 of the copy just attached
  }
  return acc;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    default: return "envelope-exceeded";
  }
}

std::string CheckResult::witness_str() const {
  std::string s;
  for (const auto& [k, v] : witness) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  }
  return s;
}

std::string CheckResult::to_json() const {
  nlohmann::json j;
  j["graph"] = graph_key;
  j["check"] = check;
  j["status"] = to_string(status);
  auto w = nlohmann::json::array();
  for (const auto& [k, v] : witness) w.push_back({k, v});
  j["witness"] = std::move(w);
  j["runtime_ms"] = runtime_ms;
  return j.dump();
}

CheckResult CheckResult::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CheckResult r;
  r.graph_key = j.at("graph").get<std::string>();
  r.check = j.at("check").get<std::string>();
  const auto s = j.at("status").get<std::string>();
  r.status = s == "holds"      ? CheckStatus::holds
             : s == "violated" ? CheckStatus::violated
                               : CheckStatus::envelope_exceeded;
  for (const auto& kv : j.at("witness"))
    r.witness.emplace_back(kv.at(0).get<std::string>(),
                           kv.at(1).get<std::string>());
  r.runtime_ms = j.at("runtime_ms").get<double>();
  return r;
}

CheckResult check_smk(const Graph& g, const Budget& b) {
  return run_check("smk", g, [&](CheckResult& r) {
    r.witness.emplace_back("class", classify(g));
    const int c = clique_count(g);
    r.witness.emplace_back("c", std::to_string(c));
    const int reg = regularity(g, b);
    r.witness.emplace_back("reg", std::to_string(reg));
    hold_iff(r, reg <= c);
  });
}

CheckResult check_hibi_matsuda(const Graph& g, const Budget& b) {
  return run_check("hibi-matsuda", g, [&](CheckResult& r) {
    const auto series = h_polynomial(g, b);
    r.witness.emplace_back("h", zp_to_string(series.h));
    const int dh = h_degree(series);
    r.witness.emplace_back("deg_h", std::to_string(dh));
    const auto table = graded_betti(g, BettiStrategy::resolution, b);
    const int reg = table.reg();
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("unique_extremal",
                           is_unique_extremal(table) ? "true" : "false");
    hold_iff(r, reg <= dh);
  });
}

CheckResult check_matsuda_murai(const Graph& g, const Budget& b) {
  return run_check("matsuda-murai", g, [&](CheckResult& r) {
    if (!is_connected(g)) {
      r.witness.emplace_back("applicable", "false");
      r.witness.emplace_back("reason", "disconnected");
      hold_iff(r, true);
      return;
    }
    const int l = longest_induced_path(g);
    const int reg = regularity(g, b);
    const bool path = is_path_shape(g);
    r.witness.emplace_back("l", std::to_string(l));
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("n_minus_1", std::to_string(g.n() - 1));
    r.witness.emplace_back("is_path", path ? "true" : "false");
    hold_iff(r, l <= reg && reg <= g.n() - 1 && (reg == g.n() - 1) == path);
  });
}

CheckResult check_omega_bound(const Graph& g, const Budget& b) {
  return run_check("omega", g, [&](CheckResult& r) {
    if (!is_connected(g)) {
      r.witness.emplace_back("applicable", "false");
      r.witness.emplace_back("reason", "disconnected");
      hold_iff(r, true);
      return;
    }
    const int bound = g.n() - clique_number(g) + 1;
    const int reg = regularity(g, b);
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("bound", std::to_string(bound));
    hold_iff(r, reg <= bound);
  });
}

CheckResult check_cut_edge_strict(const Graph& g, const Budget& b) {
  return run_check("cut-edge", g, [&](CheckResult& r) {
    const bool connected = is_connected(g);
    const bool indec = connected && is_indecomposable(g);
    const bool chordal = is_chordal(g);
    const bool bridge = !bridges(g).empty();
    const bool applicable = connected && indec && chordal && bridge;
    r.witness.emplace_back("applicable", applicable ? "true" : "false");
    if (!applicable) {
      std::string why;
      if (!connected) why = "disconnected";
      else if (!indec) why = "decomposable";
      else if (!chordal) why = "not chordal";
      else why = "no cut edge";
      r.witness.emplace_back("reason", why);
      hold_iff(r, true);
      return;
    }
    const int c = clique_count(g);
    const int reg = regularity(g, b);
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("c", std::to_string(c));
    hold_iff(r, reg < c);
  });
}

CheckResult check_additivity(const Graph& g, const Budget& b) {
  return run_check("additivity", g, [&](CheckResult& r) {
    const auto dec = decompose_indecomposable(g);
    r.witness.emplace_back("parts", std::to_string(dec.parts.size()));
    int sum = 0;
    std::string regs;
    for (const auto& part : dec.parts) {
      const int piece = regularity(induced_subgraph(g, part).graph, b);
      sum += piece;
      if (!regs.empty()) regs += '+';
      regs += std::to_string(piece);
    }
    const int reg = regularity(g, b);
    r.witness.emplace_back("part_regs", regs);
    r.witness.emplace_back("sum", std::to_string(sum));
    r.witness.emplace_back("reg", std::to_string(reg));
    hold_iff(r, reg == sum);
  });
}

CheckResult check_ohtani(const Graph& g, const Budget& b) {
  return run_check("ohtani", g, [&](CheckResult& r) {
    const auto internals = internal_vertices(g);
    if (internals.empty()) {
      r.witness.emplace_back("applicable", "false");
      r.witness.emplace_back("reason", "no internal vertex");
      hold_iff(r, true);
      return;
    }
    Fp fld(b.prime);
    const auto ring = make_ring(g.n(), OrderKind::degrevlex, b.prime);
    bool ok = true;
    std::string checked;
    for (int v : internals) {
      const auto split = ohtani_split(fld, ring, g, v);
      ok = ok && split.intersection_holds && split.sum_holds;
      if (!checked.empty()) checked += ',';
      checked += std::to_string(v);
    }
    r.witness.emplace_back("internal", checked);
    hold_iff(r, ok);
  });
}

CheckResult check_herzog(const Graph& g, const Budget& b) {
  return run_check("herzog", g, [&](CheckResult& r) {
    Fp fld(b.prime);
    const auto ring = make_ring(g.n(), OrderKind::degrevlex, b.prime);
    bool ok;
    try {
      ok = verify_herzog_decomposition(fld, ring, g);
    } catch (const std::invalid_argument& e) {
      r.status = CheckStatus::envelope_exceeded;
      r.witness.emplace_back("envelope", e.what());
      return;
    }
    r.witness.emplace_back("subsets", std::to_string(1u << g.n()));
    hold_iff(r, ok);
  });
}

CheckResult check_alternating(const Graph& g, const Budget& b) {
  return run_check("alternating", g, [&](CheckResult& r) {
    const auto table = graded_betti(g, BettiStrategy::resolution, b);
    const auto series = h_polynomial(g, b);
    r.witness.emplace_back("betti", betti_compact(table));
    r.witness.emplace_back("h", zp_to_string(series.h));
    r.witness.emplace_back("dim", std::to_string(series.dim));
    hold_iff(r, betti_matches_numerator(table, series.numerator));
  });
}

CheckResult check_extremal_identity(const Graph& g, const Budget& b) {
  return run_check("extremal-identity", g, [&](CheckResult& r) {
    const auto table = graded_betti(g, BettiStrategy::resolution, b);
    const auto corners = extremal_betti(table);
    std::string cs;
    for (const auto& [i, j] : corners) {
      if (!cs.empty()) cs += ' ';
      cs += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    r.witness.emplace_back("corners", cs);
    if (corners.size() != 1) {
      r.witness.emplace_back("applicable", "false");
      hold_iff(r, true);
      return;
    }
    const auto series = h_polynomial(g, b);
    const int lhs = table.pd() + table.reg();
    const int rhs = 2 * g.n() - series.dim + h_degree(series);
    r.witness.emplace_back("pd_plus_reg", std::to_string(lhs));
    r.witness.emplace_back("rhs", std::to_string(rhs));
    hold_iff(r, lhs == rhs);
  });
}

CheckResult check_deg4_lemma(const Graph& g, int v, const Budget& b) {
  return run_check("deg4-v" + std::to_string(v), g, [&](CheckResult& r) {
    g.check_vertex(v);
    const bool connected = is_connected(g);
    const bool internal = connected && !is_free_vertex(g, v);
    const bool big = g.degree(v) >= 4;
    const bool notpath = !is_path_shape(delete_vertex(g, v).graph);
    const bool applicable = connected && internal && big && notpath;
    r.witness.emplace_back("v", std::to_string(v));
    r.witness.emplace_back("applicable", applicable ? "true" : "false");
    if (!applicable) {
      hold_iff(r, true);
      return;
    }
    const int reg = regularity(g, b);
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("bound", std::to_string(g.n() - 3));
    hold_iff(r, reg <= g.n() - 3);
  });
}

CheckResult check_deg4_all(const Graph& g, const Budget& b) {
  return run_check("deg4", g, [&](CheckResult& r) {
    std::string eligible;
    if (is_connected(g))
      for (int v = 1; v <= g.n(); ++v)
        if (!is_free_vertex(g, v) && g.degree(v) >= 4 &&
            !is_path_shape(delete_vertex(g, v).graph)) {
          if (!eligible.empty()) eligible += ',';
          eligible += std::to_string(v);
        }
    if (eligible.empty()) {
      r.witness.emplace_back("applicable", "false");
      r.witness.emplace_back("reason", "no internal vertex of degree >= 4");
      hold_iff(r, true);
      return;
    }
    const int reg = regularity(g, b);
    r.witness.emplace_back("vertices", eligible);
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("bound", std::to_string(g.n() - 3));
    hold_iff(r, reg <= g.n() - 3);
  });
}

CheckResult check_jahangir(int m, int n, const Budget& b) {
  const Graph g = jahangir(m, n);
  return run_check("jahangir", g, [&](CheckResult& r) {
    r.witness.emplace_back("m", std::to_string(m));
    r.witness.emplace_back("n", std::to_string(n));
    const int expected = m * n - 2;
    const int reg = regularity(g, b);
    r.witness.emplace_back("reg", std::to_string(reg));
    r.witness.emplace_back("expected", std::to_string(expected));
    hold_iff(r, reg == expected);
  });
}

const std::vector<std::pair<std::string, GraphCheck>>& check_registry() {
  static const std::vector<std::pair<std::string, GraphCheck>> reg = {
      {"smk", [](const Graph& g, const Budget& b) { return check_smk(g, b); }},
      {"hibi-matsuda",
       [](const Graph& g, const Budget& b) { return check_hibi_matsuda(g, b); }},
      {"matsuda-murai",
       [](const Graph& g, const Budget& b) { return check_matsuda_murai(g, b); }},
      {"omega",
       [](const Graph& g, const Budget& b) { return check_omega_bound(g, b); }},
      {"cut-edge",
       [](const Graph& g, const Budget& b) { return check_cut_edge_strict(g, b); }},
      {"additivity",
       [](const Graph& g, const Budget& b) { return check_additivity(g, b); }},
      {"ohtani",
       [](const Graph& g, const Budget& b) { return check_ohtani(g, b); }},
      {"herzog",
       [](const Graph& g, const Budget& b) { return check_herzog(g, b); }},
      {"alternating",
       [](const Graph& g, const Budget& b) { return check_alternating(g, b); }},
      {"extremal-identity",
       [](const Graph& g, const Budget& b) { return check_extremal_identity(g, b); }},
      {"deg4",
       [](const Graph& g, const Budget& b) { return check_deg4_all(g, b); }},
  };
  return reg;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::path_for(const std::string& graph_key,
                                  std::uint32_t prime,
                                  const std::string& check) const {
  std::string hex;
  for (unsigned char c : graph_key) {
    static const char d[] = "0123456789abcdef";
    hex += d[c >> 4];
    hex += d[c & 15];
  }
  return check + "-p" + std::to_string(prime) + "-" + hex + ".json";
}

std::optional<CheckResult> ResultCache::get(const std::string& graph_key,
                                            std::uint32_t prime,
                                            const std::string& check) const {
  const std::string name = path_for(graph_key, prime, check);
  if (auto it = mem_.find(name); it != mem_.end()) return it->second;
  if (dir_.empty()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir_) / name);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return CheckResult::from_json(ss.str());
}

void ResultCache::put(const CheckResult& r, std::uint32_t prime) {
  const std::string name = path_for(r.graph_key, prime, r.check);
  mem_[name] = r;
  if (dir_.empty()) return;
  std::filesystem::create_directories(dir_);
  write_file((std::filesystem::path(dir_) / name).string(), r.to_json());
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void sort_results(std::vector<CheckResult>& results) {
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return std::tie(a.graph_key, a.check) <
                     std::tie(b.graph_key, b.check);
            });
}

}  // namespace

std::string results_csv(std::vector<CheckResult> results) {
  sort_results(results);
  std::string out = "graph,check,status,witness,runtime_ms\n";
  for (const auto& r : results) {
    out += csv_escape(r.graph_key) + "," + r.check + "," +
           to_string(r.status) + "," + csv_escape(r.witness_str()) + "," +
           fmt_ms(r.runtime_ms) + "\n";
  }
  return out;
}

std::string results_json(std::vector<CheckResult> results) {
  sort_results(results);
  auto arr = nlohmann::json::array();
  for (const auto& r : results) arr.push_back(nlohmann::json::parse(r.to_json()));
  return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace bei
