// bei: workbench for binomial edge ideals of graphs.  Subcommands emit named
// graph families, print combinatorial invariants, Groebner bases, Hilbert
// series data and graded Betti tables, and run the named verification checks
// on single graphs or exhaustive sweeps over connected isomorphism classes.
// Exit code: 0 = everything holds, 1 = a violation was found, 2 = envelope
// exceeded or error.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "bei/betti.hpp"
#include "bei/budget.hpp"
#include "bei/classes.hpp"
#include "bei/field.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/harness.hpp"
#include "bei/hilbert.hpp"
#include "bei/invariants.hpp"

namespace {

using namespace bei;

Budget assemble_budget(std::uint32_t prime, bool stretch, double budget_seconds) {
  Budget b;
  b.prime = prime;
  if (stretch) {
    // raises the size caps two orders of magnitude; pair with --budget to
    // keep a wall clock on it
    b.max_generators *= 100;
    b.max_entries *= 100;
  }
  b.budget_seconds = budget_seconds;
  return b;
}

Graph build_family(const std::string& family, const std::vector<int>& p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw std::invalid_argument(family + " takes " + std::to_string(k) +
                                  " integer parameter(s)");
  };
  if (family == "path") { need(1); return path_graph(p[0]); }
  if (family == "cycle") { need(1); return cycle_graph(p[0]); }
  if (family == "complete") { need(1); return complete_graph(p[0]); }
  if (family == "star") { need(1); return star_graph(p[0]); }
  if (family == "wheel") { need(1); return wheel(p[0]); }
  if (family == "jahangir") { need(2); return jahangir(p[0], p[1]); }
  if (family == "flower") { need(2); return flower(p[0], p[1]); }
  if (family == "join-p2") {  // edge joined to n isolated vertices
    need(1);
    return graph_join(path_graph(2), empty_graph(p[0]));
  }
  if (family == "counterexample") { need(0); return counterexample_graph(); }
  if (family == "glued") { need(1); return glued_counterexample(p[0]); }
  if (family == "cm-closed")
    return cm_closed_graph(make_interval_spec(p));
  if (family == "quasi-cycle")
    return quasi_cycle(make_interval_spec(p));
  if (family == "semi-cycle") {
    if (p.size() < 3)
      throw std::invalid_argument("semi-cycle takes cut points then n");
    return semi_cycle(make_interval_spec({p.begin(), p.end() - 1}), p.back());
  }
  throw std::invalid_argument("unknown family " + family);
}

std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (int x : v) {
    if (!s.empty()) s += sep;
    s += std::to_string(x);
  }
  return s;
}

std::string set_list(const std::vector<std::vector<int>>& sets) {
  std::string s;
  for (const auto& set : sets) {
    if (!s.empty()) s += ' ';
    s += "{" + join_ints(set) + "}";
  }
  return s;
}

void print_invariants(const Graph& g) {
  std::printf("n %d\n", g.n());
  std::string es;
  for (auto [u, v] : g.edges()) {
    if (!es.empty()) es += ' ';
    es += std::to_string(u) + "-" + std::to_string(v);
  }
  std::printf("edges %d: %s\n", g.edge_count(), es.c_str());
  std::printf("connected %s\n", is_connected(g) ? "true" : "false");
  std::printf("components %zu\n", connected_components(g).size());

  const auto cliques = maximal_cliques(g);
  std::printf("maximal_cliques %zu: %s\n", cliques.cliques.size(),
              set_list(cliques.cliques).c_str());
  std::printf("c %d\n", clique_count(g));
  std::printf("omega %d\n", clique_number(g));
  std::printf("free_vertices %s\n", join_ints(free_vertices(g)).c_str());
  std::printf("internal_vertices %s\n", join_ints(internal_vertices(g)).c_str());
  std::printf("iv %d\n", iv(g));
  std::string cd;
  for (int v = 1; v <= g.n(); ++v) {
    if (!cd.empty()) cd += ' ';
    cd += std::to_string(v) + ":" + std::to_string(cdeg(g, v));
  }
  std::printf("cdeg %s\n", cd.c_str());
  std::printf("longest_induced_path %d\n", longest_induced_path(g));
  std::printf("kappa %d\n", vertex_connectivity(g));

  const auto blocks = block_decomposition(g);
  std::printf("blocks %zu: %s\n", blocks.blocks.size(),
              set_list(blocks.blocks).c_str());
  std::printf("cut_vertices %s\n", join_ints(blocks.cut_vertices).c_str());
  std::string br;
  for (auto [u, v] : blocks.bridges) {
    if (!br.empty()) br += ' ';
    br += std::to_string(u) + "-" + std::to_string(v);
  }
  std::printf("bridges %s\n", br.c_str());

  const auto cw = chordality(g);
  std::printf("chordal %s", cw.chordal ? "true" : "false");
  if (cw.chordal) std::printf(" (peo %s)", join_ints(cw.peo).c_str());
  std::printf("\n");

  auto tried = [&](const char* name, auto&& fn) {
    try {
      std::printf("%s %s\n", name, fn() ? "true" : "false");
    } catch (const std::invalid_argument& e) {
      std::printf("%s unavailable: %s\n", name, e.what());
    }
  };
  tried("closed_labeling", [&] { return is_closed_labeling(g); });
  try {
    const auto relab = exists_closed_labeling(g);
    if (relab)
      std::printf("exists_closed_labeling true (relabel %s)\n",
                  join_ints(*relab).c_str());
    else
      std::printf("exists_closed_labeling false\n");
  } catch (const std::invalid_argument& e) {
    std::printf("exists_closed_labeling unavailable: %s\n", e.what());
  }
  tried("quasi_forest", [&] { return is_quasi_forest(g); });
  tried("quasi_tree", [&] { return is_quasi_tree(g); });
  tried("block_graph", [&] { return is_block_graph(g); });
  tried("quasi_cycle", [&] { return is_quasi_cycle(g); });
  tried("semi_cycle", [&] { return is_semi_cycle(g); });
  tried("quasi_block_graph", [&] { return is_quasi_block_graph(g); });
  tried("semi_block_graph", [&] { return is_semi_block_graph(g); });
  try {
    std::printf("qc %d\n", qc(g));
  } catch (const std::invalid_argument& e) {
    std::printf("qc unavailable: %s\n", e.what());
  }

  const auto dec = decompose_indecomposable(g);
  std::printf("indecomposable %s\n", is_indecomposable(g) ? "true" : "false");
  std::printf("parts %zu: %s\n", dec.parts.size(), set_list(dec.parts).c_str());
  if (!dec.glue_vertices.empty())
    std::printf("glue_vertices %s\n", join_ints(dec.glue_vertices).c_str());
  std::printf("key %s\n", canonical_key(g).c_str());
}

// A wall-clock abort is machine-dependent; everything else (including
// size-cap envelopes) is deterministic and safe to cache.
bool cacheable(const CheckResult& r) {
  if (r.status != CheckStatus::envelope_exceeded) return true;
  for (const auto& [k, v] : r.witness)
    if (k == "envelope" && v.find("wall-clock") != std::string::npos)
      return false;
  return true;
}

struct Job {
  const Graph* graph;
  std::string check;
  const GraphCheck* fn;
};

std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs,
                                  const Budget& budget, int threads) {
  std::vector<CheckResult> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      out[k] = (*jobs[k].fn)(*jobs[k].graph, budget);
      const std::size_t d = done.fetch_add(1) + 1;
      std::fprintf(stderr, "[%zu/%zu] %s %s %s (%.1f ms)\n", d, jobs.size(),
                   out[k].graph_key.c_str(), out[k].check.c_str(),
                   to_string(out[k].status).c_str(), out[k].runtime_ms);
    }
  };
  if (threads <= 1 || jobs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(threads, jobs.size());
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

int exit_code_for(const std::vector<CheckResult>& results) {
  bool envelope = false;
  for (const auto& r : results) {
    if (r.status == CheckStatus::violated) return 1;
    if (r.status == CheckStatus::envelope_exceeded) envelope = true;
  }
  return envelope ? 2 : 0;
}

// Resolve cache hits up front, compute the misses (pooled), store what is
// safe to store, and emit one report.
int run_checks(const std::vector<std::pair<const Graph*, std::string>>& tasks,
               const Budget& budget, int threads, const std::string& out_dir,
               const std::string& format) {
  const auto& registry = check_registry();
  auto find_check = [&](const std::string& name) -> const GraphCheck* {
    for (const auto& [n, fn] : registry)
      if (n == name) return &fn;
    throw std::invalid_argument("unknown check " + name);
  };

  ResultCache cache(out_dir.empty()
                        ? ""
                        : (std::filesystem::path(out_dir) / "cache").string());
  std::vector<CheckResult> results;
  std::vector<Job> jobs;
  for (const auto& [g, name] : tasks) {
    if (auto hit = cache.get(canonical_key(*g), budget.prime, name)) {
      results.push_back(std::move(*hit));
      continue;
    }
    jobs.push_back(Job{g, name, find_check(name)});
  }
  std::fprintf(stderr, "%zu task(s): %zu cached, %zu to run\n", tasks.size(),
               results.size(), jobs.size());
  auto computed = run_jobs(jobs, budget, threads);
  for (auto& r : computed) {
    if (cacheable(r)) cache.put(r, budget.prime);
    results.push_back(std::move(r));
  }

  const std::string report =
      format == "json" ? results_json(results) : results_csv(results);
  std::fputs(report.c_str(), stdout);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::string path =
        (std::filesystem::path(out_dir) / ("results." + format)).string();
    write_file(path, report);
    std::fprintf(stderr, "report written to %s\n", path.c_str());
  }
  return exit_code_for(results);
}

// Connected isomorphism classes on 2..max_n vertices (K_1 has an empty edge
// ideal, so sweeps start at two vertices).
std::vector<Graph> sweep_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) out.push_back(g);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideal workbench"};
  app.require_subcommand(1);

  // gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand(
      "gen",
      "emit a named family: path|cycle|complete|star|wheel N, jahangir M N, "
      "flower H K, join-p2 N, counterexample, glued K, cm-closed CUTS..., "
      "quasi-cycle CUTS..., semi-cycle CUTS... N");
  std::string gen_family;
  std::vector<int> gen_params;
  std::string gen_out;
  bool gen_g6 = false;
  gen->add_option("family", gen_family, "family name")->required();
  gen->add_option("params", gen_params, "integer parameters");
  gen->add_option("--out", gen_out, "write to file instead of stdout");
  gen->add_flag("--graph6", gen_g6, "emit graph6 instead of adjacency text");

  // invariants -----------------------------------------------------------
  auto* inv = app.add_subcommand("invariants",
                                 "print combinatorial invariants of a graph");
  std::string inv_file;
  inv->add_option("graph", inv_file, "graph file (adjacency text or graph6)")
      ->required();

  // gb -------------------------------------------------------------------
  auto* gbc = app.add_subcommand("gb", "print the reduced Groebner basis");
  std::string gb_file, gb_order = "degrevlex";
  std::uint32_t gb_prime = kDefaultPrime;
  gbc->add_option("graph", gb_file, "graph file")->required();
  gbc->add_option("--order", gb_order, "monomial order")
      ->check(CLI::IsMember({"lex", "degrevlex"}));
  gbc->add_option("--prime", gb_prime, "coefficient field F_p");

  // hilbert ----------------------------------------------------------------
  auto* hil = app.add_subcommand(
      "hilbert", "print Hilbert series numerator, h-polynomial, dimension");
  std::string hil_file;
  std::uint32_t hil_prime = kDefaultPrime;
  int hil_coeffs = 8;
  hil->add_option("graph", hil_file, "graph file")->required();
  hil->add_option("--prime", hil_prime, "coefficient field F_p");
  hil->add_option("--coeffs", hil_coeffs,
                  "how many Hilbert function values to print");

  // betti --------------------------------------------------------------
  auto* bet = app.add_subcommand(
      "betti", "print the graded Betti table, regularity, depth");
  std::string bet_file, bet_strategy = "resolution", bet_format = "table";
  std::uint32_t bet_prime = kDefaultPrime;
  int bet_strand = -1;
  bool bet_stretch = false;
  double bet_budget = 0;
  bet->add_option("graph", bet_file, "graph file")->required();
  bet->add_option("--format", bet_format, "table layout or {i,j,rank} triples")
      ->check(CLI::IsMember({"table", "json"}));
  bet->add_option("--strategy", bet_strategy, "computation strategy")
      ->check(CLI::IsMember({"resolution", "koszul"}));
  bet->add_option("--strand", bet_strand,
                  "koszul strand cap (default: reg from a resolution run)");
  bet->add_option("--prime", bet_prime, "coefficient field F_p");
  bet->add_flag("--stretch", bet_stretch, "raise the size caps 100x");
  bet->add_option("--budget", bet_budget, "wall-clock budget in seconds");

  // check ----------------------------------------------------------------
  std::string check_names;
  {
    for (const auto& [n, fn] : check_registry()) {
      if (!check_names.empty()) check_names += "|";
      check_names += n;
    }
    check_names += "|jahangir";
  }
  auto* chk =
      app.add_subcommand("check", "run one named check: " + check_names);
  std::string chk_name, chk_file, chk_out, chk_format = "csv";
  int chk_sweep = 0, chk_m = 0, chk_n = 0, chk_vertex = 0;
  std::uint32_t chk_prime = kDefaultPrime;
  bool chk_stretch = false;
  double chk_budget = 0;
  int chk_jobs = std::max(1u, std::thread::hardware_concurrency());
  chk->add_option("name", chk_name, "check name")->required();
  chk->add_option("graph", chk_file, "graph file");
  chk->add_option("--sweep", chk_sweep,
                  "run on every connected graph with 2..N vertices");
  chk->add_option("--m", chk_m, "jahangir spoke spacing");
  chk->add_option("--n", chk_n, "jahangir spoke count");
  chk->add_option("--vertex", chk_vertex, "single vertex for the deg4 check");
  chk->add_option("--prime", chk_prime, "coefficient field F_p");
  chk->add_flag("--stretch", chk_stretch, "raise the size caps 100x");
  chk->add_option("--budget", chk_budget, "wall-clock budget in seconds");
  chk->add_option("--out", chk_out, "directory for the report and cache");
  chk->add_option("--format", chk_format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  chk->add_option("--jobs", chk_jobs, "worker threads for sweeps");

  // sweep ---------------------------------------------------------------
  auto* swp = app.add_subcommand(
      "sweep", "run checks over all connected graphs with 2..N vertices");
  int swp_max_n = 0;
  std::string swp_checks, swp_out, swp_format = "csv";
  std::uint32_t swp_prime = kDefaultPrime;
  bool swp_stretch = false;
  double swp_budget = 0;
  int swp_jobs = std::max(1u, std::thread::hardware_concurrency());
  swp->add_option("--max-n", swp_max_n, "largest vertex count")->required();
  swp->add_option("--checks", swp_checks,
                  "comma-separated check names (default: all; herzog and "
                  "ohtani are the expensive ones)");
  swp->add_option("--prime", swp_prime, "coefficient field F_p");
  swp->add_flag("--stretch", swp_stretch, "raise the size caps 100x");
  swp->add_option("--budget", swp_budget, "wall-clock budget in seconds");
  swp->add_option("--out", swp_out, "directory for the report and cache");
  swp->add_option("--format", swp_format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  swp->add_option("--jobs", swp_jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const Graph g = build_family(gen_family, gen_params);
      const std::string text = gen_g6 ? to_graph6(g) + "\n" : to_adjacency_text(g);
      if (gen_out.empty())
        std::fputs(text.c_str(), stdout);
      else
        write_file(gen_out, text);
      return 0;
    }

    if (*inv) {
      print_invariants(read_graph_file(inv_file));
      return 0;
    }

    if (*gbc) {
      const Graph g = read_graph_file(gb_file);
      const auto kind =
          gb_order == "lex" ? OrderKind::lex : OrderKind::degrevlex;
      const auto gb = groebner_of(g, gb_prime, kind);
      Fp fld(gb_prime);
      std::fputs(gb_dump(fld, gb).c_str(), stdout);
      std::fprintf(stderr, "%zu basis elements\n", gb.elems.size());
      return 0;
    }

    if (*hil) {
      const Graph g = read_graph_file(hil_file);
      const auto gb = groebner_of(g, hil_prime);
      const auto s = hilbert_series(gb);
      std::printf("series (%s)/(1-t)^%d\n", zp_to_string(s.h).c_str(), s.dim);
      std::printf("numerator %s\n", zp_to_string(s.numerator).c_str());
      std::printf("h %s\n", zp_to_string(s.h).c_str());
      std::printf("deg_h %d\n", h_degree(s));
      std::printf("dim %d\n", s.dim);
      std::printf("multiplicity %s\n", multiplicity(s).get_str().c_str());
      const auto coeffs = hilbert_coefficients(s, hil_coeffs - 1);
      std::string hf;
      for (const auto& c : coeffs) {
        if (!hf.empty()) hf += ' ';
        hf += c.get_str();
      }
      std::printf("hilbert_function %s\n", hf.c_str());
      return 0;
    }

    if (*bet) {
      const Graph g = read_graph_file(bet_file);
      const Budget budget = assemble_budget(bet_prime, bet_stretch, bet_budget);
      const auto strategy = bet_strategy == "koszul" ? BettiStrategy::koszul
                                                     : BettiStrategy::resolution;
      const auto table = graded_betti(g, strategy, budget, bet_strand);
      if (bet_format == "json") {
        std::string js = "[";
        for (const auto& [ij, v] : table.entries) {
          if (js.size() > 1) js += ",";
          js += "{\"i\":" + std::to_string(ij.first) +
                ",\"j\":" + std::to_string(ij.second) +
                ",\"rank\":" + std::to_string(v) + "}";
        }
        std::printf("%s]\n", js.c_str());
      } else {
        std::fputs(table.to_string().c_str(), stdout);
      }
      std::printf("reg %d\n", table.reg());
      std::printf("pd %d\n", table.pd());
      std::printf("depth %d\n", 2 * g.n() - table.pd());
      std::string cs;
      for (auto [i, j] : extremal_betti(table)) {
        if (!cs.empty()) cs += ' ';
        cs += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      std::printf("extremal %s\n", cs.c_str());
      return 0;
    }

    if (*chk) {
      const Budget budget = assemble_budget(chk_prime, chk_stretch, chk_budget);
      if (chk_name == "jahangir") {
        if (chk_m < 1 || chk_n < 3)
          throw std::invalid_argument("jahangir check needs --m and --n");
        std::vector<CheckResult> rs{check_jahangir(chk_m, chk_n, budget)};
        const std::string report = chk_format == "json" ? results_json(rs)
                                                        : results_csv(rs);
        std::fputs(report.c_str(), stdout);
        return exit_code_for(rs);
      }
      if (chk_vertex > 0) {
        if (chk_name != "deg4")
          throw std::invalid_argument("--vertex only applies to deg4");
        if (chk_file.empty())
          throw std::invalid_argument("--vertex needs a graph file");
        const Graph g = read_graph_file(chk_file);
        std::vector<CheckResult> rs{check_deg4_lemma(g, chk_vertex, budget)};
        const std::string report = chk_format == "json" ? results_json(rs)
                                                        : results_csv(rs);
        std::fputs(report.c_str(), stdout);
        return exit_code_for(rs);
      }
      std::vector<Graph> graphs;
      if (!chk_file.empty())
        graphs.push_back(read_graph_file(chk_file));
      else if (chk_sweep >= 2)
        graphs = sweep_graphs(chk_sweep);
      else
        throw std::invalid_argument("check needs a graph file or --sweep N");
      std::vector<std::pair<const Graph*, std::string>> tasks;
      for (const Graph& g : graphs) tasks.emplace_back(&g, chk_name);
      return run_checks(tasks, budget, chk_jobs, chk_out, chk_format);
    }

    if (*swp) {
      const Budget budget = assemble_budget(swp_prime, swp_stretch, swp_budget);
      std::vector<std::string> names;
      if (swp_checks.empty()) {
        for (const auto& [n, fn] : check_registry()) names.push_back(n);
      } else {
        std::string cur;
        for (char c : swp_checks + ",") {
          if (c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
      }
      const std::vector<Graph> graphs = sweep_graphs(swp_max_n);
      std::vector<std::pair<const Graph*, std::string>> tasks;
      for (const Graph& g : graphs)
        for (const auto& name : names) tasks.emplace_back(&g, name);
      return run_checks(tasks, budget, swp_jobs, swp_out, swp_format);
    }
  } catch (const BudgetExceeded& e) {
    std::fprintf(stderr, "envelope exceeded: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
