#pragma once
// Graph-level pipeline over the default prime field (Groebner basis ->
// Hilbert series -> Betti table), exhaustive isomorphism-free enumeration
// of small connected graphs, the named verification checks with witness
// recording, a file-backed result cache, and CSV/JSON report emission.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bei/betti.hpp"
#include "bei/field.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/hilbert.hpp"

namespace bei {

// Resource envelope for one graph-level computation.  The caps bound memory
// (generator count of the resolution, fill of a rank elimination); hitting
// one raises BudgetExceeded, which the checks turn into an explicit
// envelope-exceeded result rather than a partial answer.  budget_seconds > 0
// additionally bounds wall-clock time via stop probes threaded through the
// engines; results cut short that way are machine-dependent, so they are
// never written to the result cache.
struct Budget {
  std::uint32_t prime = kDefaultPrime;
  long max_generators = 2000000;
  long max_entries = 20000000;
  double budget_seconds = 0;
};

// Deadline probe for Budget::budget_seconds, or an empty function when the
// budget is unlimited.  The deadline starts when this is called.
std::function<bool()> make_stop(const Budget& b);

GroebnerBasis<Fp> groebner_of(const Graph& g,
                              std::uint32_t prime = kDefaultPrime,
                              OrderKind kind = OrderKind::degrevlex);

HilbertSeries h_polynomial(const Graph& g, std::uint32_t prime = kDefaultPrime);
HilbertSeries h_polynomial(const Graph& g, const Budget& budget);
int deg_h(const Graph& g, std::uint32_t prime = kDefaultPrime);
long hilbert_function(const Graph& g, int k,
                      std::uint32_t prime = kDefaultPrime);

enum class BettiStrategy { resolution, koszul };

// koszul is complete only for strands up to reg(S/J_G); the cap is taken
// from a resolution run when not supplied, so the default cross-validates.
BettiTable graded_betti(const Graph& g,
                        BettiStrategy strategy = BettiStrategy::resolution,
                        const Budget& budget = {}, int koszul_strand = -1);

int regularity(const Graph& g, const Budget& budget = {});
int projective_dimension(const Graph& g, const Budget& budget = {});
int depth(const Graph& g, const Budget& budget = {});  // 2n - pd

// Alternating column sums of the Betti table against the series numerator:
// sum_i (-1)^i beta_{i,j} t^j = h(t) (1-t)^(2n-dim), both sides exact.
bool alternating_sum_check(const Graph& g, const Budget& budget = {});
// When the table has a unique extremal corner: pd + reg = 2n - dim + deg h.
bool unique_extremal_identity_check(const Graph& g, const Budget& budget = {});

// One representative per isomorphism class of connected graphs, sorted by
// canonical key.  Counts are self-checked against 1, 1, 2, 6, 21, 112, 853.
std::vector<Graph> enumerate_connected_graphs(int n);  // n <= 7

// The 13-vertex block graph whose regularity exceeds the degree of its
// h-polynomial: triangles {1,2,3}, {1,4,5}, {1,6,7}, {2,10,11}, {2,12,13}
// and pendant edges {3,8}, {3,9}.
Graph counterexample_graph();
// Chain of k copies glued pendant-to-pendant at vertices 8/9 (each free),
// so regularity 6k and h-degree 5k; n = 13k - (k-1).
Graph glued_counterexample(int k);

enum class CheckStatus { holds, violated, envelope_exceeded };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string graph_key;  // canonical key of the graph checked
  std::string check;
  CheckStatus status = CheckStatus::envelope_exceeded;
  std::vector<std::pair<std::string, std::string>> witness;  // ordered
  double runtime_ms = 0;

  std::string witness_str() const;  // "k=v;k=v"
  std::string to_json() const;      // one nested object
  static CheckResult from_json(const std::string& text);
};

// Named checks.  Each classifies the hypotheses mechanically; a graph that
// fails them is reported with witness applicable=false (the statement is
// vacuous there), never silently skipped.  BudgetExceeded from the engines
// becomes status envelope_exceeded with the reason in the witness.
CheckResult check_smk(const Graph& g, const Budget& b = {});
CheckResult check_hibi_matsuda(const Graph& g, const Budget& b = {});
CheckResult check_matsuda_murai(const Graph& g, const Budget& b = {});
CheckResult check_omega_bound(const Graph& g, const Budget& b = {});
CheckResult check_cut_edge_strict(const Graph& g, const Budget& b = {});
CheckResult check_additivity(const Graph& g, const Budget& b = {});
CheckResult check_ohtani(const Graph& g, const Budget& b = {});
CheckResult check_herzog(const Graph& g, const Budget& b = {});
CheckResult check_alternating(const Graph& g, const Budget& b = {});
CheckResult check_extremal_identity(const Graph& g, const Budget& b = {});
CheckResult check_deg4_lemma(const Graph& g, int v, const Budget& b = {});
CheckResult check_deg4_all(const Graph& g, const Budget& b = {});
CheckResult check_jahangir(int m, int n, const Budget& b = {});

// Registry used by the CLI: name -> graph-level check.
using GraphCheck = std::function<CheckResult(const Graph&, const Budget&)>;
const std::vector<std::pair<std::string, GraphCheck>>& check_registry();

// Read-through/write-through store keyed by (canonical graph key, prime,
// check name); one JSON file per key under dir.  A hit returns the stored
// record byte-for-byte; an empty dir disables persistence.
class ResultCache {
 public:
  explicit ResultCache(std::string dir = "");
  std::optional<CheckResult> get(const std::string& graph_key,
                                 std::uint32_t prime,
                                 const std::string& check) const;
  void put(const CheckResult& r, std::uint32_t prime);

 private:
  std::string path_for(const std::string& graph_key, std::uint32_t prime,
                       const std::string& check) const;
  std::string dir_;
  std::map<std::string, CheckResult> mem_;
};

// Reports sorted by (graph key, check name).  CSV: one row per result.
// JSON: array of the nested objects.
std::string results_csv(std::vector<CheckResult> results);
std::string results_json(std::vector<CheckResult> results);
void write_file(const std::string& path, const std::string& content);

}  // namespace bei
