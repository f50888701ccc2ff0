#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kscontext/ortho_graph.hpp"

namespace kscontext {

/// Value assigned to a ray: noncontextual 0, contextual, or noncontextual 1.
enum class Label : std::uint8_t { kZero, kContextual, kOne };

using Labeling = std::vector<Label>;

char label_char(Label l);

struct ValidationReport {
  bool valid = true;
  std::string violation;
  /// First context containing no C or 1 label.
  std::optional<int> unhit_context;
  /// First edge whose endpoints are both labelled 1.
  std::optional<std::pair<int, int>> one_one_edge;
};

/// Every context needs a C or 1 label; adjacent vertices may not both be 1.
/// Throws std::invalid_argument when the labeling length differs from the graph size.
ValidationReport validate_labeling(const OrthoGraph& g, const std::vector<Context>& contexts, const Labeling& labeling);

struct SolveStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;
  std::optional<std::uint64_t> seed;
  /// Best proven lower bound on qs.
  int lower_bound = 0;
};

struct SolveResult {
  int qs = 0;
  int n = 0;
  Labeling labeling;
  /// C-labelled plus 1-labelled vertices.
  std::vector<int> transversal;
  /// 1-labelled vertices.
  std::vector<int> independent_part;
  bool optimal = false;
  SolveStats stats;

  mpq_class q() const;
};

/// Fills qs, n, transversal and independent_part from a labeling.
SolveResult result_from_labeling(Labeling labeling);

std::string to_json(const SolveResult& result);
SolveResult solve_result_from_json(const std::string& text);

// Independence and transversals -------------------------------------------------

/// A maximum independent set, sorted.
std::vector<int> max_independent_set(const OrthoGraph& g);

struct TransversalResult {
  std::vector<int> vertices;
  bool optimal = false;
  int lower_bound = 0;
  std::uint64_t nodes = 0;
};

/// Minimum set of vertices meeting every context (exact branch and bound).
/// With a finite timeout the best set found so far is returned with optimal=false.
TransversalResult min_transversal(const OrthoGraph& g, const std::vector<Context>& contexts,
                                  double timeout_seconds = 600.0);

/// Minimum vertex cover, computed as a transversal of the edge set.
TransversalResult min_vertex_cover(const OrthoGraph& g, double timeout_seconds = 600.0);

// q_s solvers --------------------------------------------------------------------

struct ExactOptions {
  double timeout_seconds = 600.0;
  /// Local-search moves spent on the initial upper bound.
  std::uint64_t warm_start_budget = 20000;
};

/// Minimum number of C labels over valid labelings. On timeout returns the best
/// labeling found with optimal=false and the proven bound in stats.lower_bound.
SolveResult solve_qs_exact(const OrthoGraph& g, const std::vector<Context>& contexts, const ExactOptions& options = {});

/// Randomised relabel-and-repair local search under simulated annealing.
/// Deterministic for a given seed; always optimal=false.
SolveResult solve_qs_heuristic(const OrthoGraph& g, const std::vector<Context>& contexts, std::uint64_t budget,
                               std::uint64_t seed);

/// Runs solve_qs_heuristic for seeds seed0, seed0+1, ... on up to `threads`
/// workers and keeps the best result (lowest qs, then lowest seed).
SolveResult solve_qs_portfolio(const OrthoGraph& g, const std::vector<Context>& contexts, std::uint64_t budget,
                               std::uint64_t seed0, int seeds, int threads);

/// Exhaustive enumeration of all 3^n labelings; n <= 15.
SolveResult brute_force_qs(const OrthoGraph& g, const std::vector<Context>& contexts);

/// True iff some independent set meets every context (qs == 0).
bool ks_noncontextually_colorable(const OrthoGraph& g, const std::vector<Context>& contexts);

struct TriangleFreeBound {
  /// n - 2 alpha, possibly negative.
  int raw = 0;
  int clamped = 0;
  int alpha = 0;
  int vertex_cover = 0;
  /// vertex_cover == n - alpha.
  bool gallai_holds = false;
};

/// Lower bound n - 2 alpha for triangle-free graphs. Throws std::invalid_argument
/// if `g` contains a triangle.
TriangleFreeBound triangle_free_bound(const OrthoGraph& g);

}  // namespace kscontext
