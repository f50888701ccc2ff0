// Acceptance run: one PASS/FAIL line per criterion, details indented beneath.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kscontext/bounds.hpp"
#include "kscontext/catalog.hpp"
#include "kscontext/montecarlo.hpp"
#include "kscontext/ortho_graph.hpp"
#include "kscontext/solver.hpp"
#include "support/random_graphs.hpp"

using namespace kscontext;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    details_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
  }

  bool report(double secs) const {
    std::cout << (ok_ ? "[PASS] " : "[FAIL] ") << title_ << " (" << std::fixed << std::setprecision(1) << secs
              << " s)\n";
    std::cout.unsetf(std::ios::fixed);
    for (const auto& d : details_) std::cout << d << "\n";
    std::cout.flush();
    return ok_;
  }

 private:
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

template <typename... Args>
std::string str(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

bool certificate_ok(const OrthoGraph& g, const std::vector<Context>& contexts, const SolveResult& r) {
  int c = 0;
  for (Label l : r.labeling) c += l == Label::kContextual ? 1 : 0;
  return validate_labeling(g, contexts, r.labeling).valid && c == r.qs && is_independent(g, r.independent_part);
}

struct TableTarget {
  std::string name;
  int tau;
  int alpha;
  int qs;
  std::string q;
  double limit_seconds;
};

bool criterion_table() {
  auto t0 = Clock::now();
  Criterion c("1 table reproduction");
  const std::vector<TableTarget> exact_rows{{"cabello18", 5, 4, 1, "1/18", 10.0},
                                            {"peres_mermin24", 7, 5, 2, "1/12", 60.0},
                                            {"peres33", 9, 12, 1, "1/33", 600.0}};
  for (const auto& row : exact_rows) {
    auto t = Clock::now();
    OrthoGraph g = build_graph(load_builtin(row.name));
    auto contexts = enumerate_contexts(g);
    const int tau = static_cast<int>(min_transversal(g, contexts).vertices.size());
    const int alpha = static_cast<int>(max_independent_set(g).size());
    SolveResult r = solve_qs_exact(g, contexts);
    const double secs = seconds_since(t);
    c.check(r.optimal && tau == row.tau && alpha == row.alpha && r.qs == row.qs && r.q().get_str() == row.q &&
                certificate_ok(g, contexts, r) && secs < row.limit_seconds,
            str(row.name, ": transversal ", tau, ", independence ", alpha, ", qs ", r.qs, ", q ", r.q().get_str(),
                ", optimal ", r.optimal, ", ", secs, " s (limit ", row.limit_seconds, " s)"));
  }
  {
    auto t = Clock::now();
    OrthoGraph g = build_graph(load_builtin("stabilizer2q"));
    auto contexts = enumerate_contexts(g);
    const int alpha = static_cast<int>(max_independent_set(g).size());
    ExactOptions options;
    options.timeout_seconds = 3600.0;
    SolveResult r = solve_qs_exact(g, contexts, options);
    TransversalResult tau = min_transversal(g, contexts, 3600.0);
    const double secs = seconds_since(t);
    c.check(contexts.size() == 105 && alpha == 12 && tau.optimal && tau.vertices.size() == 18 && r.optimal &&
                r.qs == 6 && r.transversal.size() == 18 && certificate_ok(g, contexts, r),
            str("stabilizer2q: contexts ", contexts.size(), ", independence ", alpha, ", transversal ",
                tau.vertices.size(), ", qs ", r.qs, " (", r.optimal ? "exact" : "bound", ", lower bound ",
                r.stats.lower_bound, "), ", secs, " s"));
  }
  {
    auto t = Clock::now();
    OrthoGraph g = build_graph(load_builtin("e8"));
    auto contexts = enumerate_contexts(g);
    const std::uint64_t seed = 1;
    SolveResult r = solve_qs_heuristic(g, contexts, 1000000, seed);
    const double secs = seconds_since(t);
    c.check(contexts.size() == 2025 && certificate_ok(g, contexts, r) && r.transversal.size() <= 22 &&
                r.independent_part.size() >= 8 && r.qs <= 14 && secs < 600.0,
            str("e8: contexts ", contexts.size(), ", heuristic seed ", seed, ": transversal ", r.transversal.size(),
                ", independent part ", r.independent_part.size(), ", qs ", r.qs, ", ", secs, " s"));
  }
  return c.report(seconds_since(t0));
}

bool criterion_bounds() {
  auto t0 = Clock::now();
  Criterion c("2 bound values");
  const mpq_class b9 = theorem1_bound(9);
  c.check(b9 == mpq_class("4251920575/11019960576"), str("theorem1_bound(9) = ", b9.get_str()));
  ArgmaxResult am = argmax_over_d(50);
  c.check(am.d == 9, str("argmax over d <= 50 is d = ", am.d));
  const double big = theorem1_bound(10000).get_d();
  c.check(std::fabs(big - std::exp(-1.0)) < 1e-3, str("|theorem1_bound(10^4) - 1/e| = ", std::fabs(big - std::exp(-1.0))));
  return c.report(seconds_since(t0));
}

bool criterion_rank_bound() {
  auto t0 = Clock::now();
  Criterion c("3 rank-bound consistency");
  double worst = 0.0;
  for (int d = 2; d <= 64; ++d) worst = std::max(worst, std::fabs(rank_bound(d, 1) - theorem1_bound(d).get_d()));
  c.check(worst <= 1e-12, str("max |rank_bound(d,1) - theorem1_bound(d)| over d <= 64 = ", worst));
  c.check(rank_bound_exact(4, 2) == 0 && rank_bound(4, 2) == 0.0, "rank_bound(4, 2) = 0 exactly");
  CorollaryReport rep = verify_half_corollary(64);
  bool strict = true;
  const mpq_class half{1, 2};
  for (const auto& e : rep.entries) {
    if (2 * e.r < e.d) strict = strict && e.value < half;
  }
  c.check(rep.holds && strict,
          str("verify_half_corollary(64): worst d=", rep.worst.d, " r=", rep.worst.r, " value ",
              rep.worst.value.get_d(), ", margin ", rep.margin));
  c.check(rep.median_holds, "median m(r, d-r) <= r/d on the whole grid");
  return c.report(seconds_since(t0));
}

bool criterion_oracle() {
  auto t0 = Clock::now();
  Criterion c("4 oracle equivalence");
  std::mt19937_64 rng(20240601);
  int mismatches = 0;
  int bad_certificates = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + static_cast<int>(rng() % 9);
    OrthoGraph g = kscontext::testing::random_graph(rng, n);
    auto contexts = enumerate_contexts(g);
    SolveResult exact = solve_qs_exact(g, contexts);
    SolveResult oracle = brute_force_qs(g, contexts);
    if (!exact.optimal || exact.qs != oracle.qs) ++mismatches;
    if (!certificate_ok(g, contexts, exact) || !certificate_ok(g, contexts, oracle)) ++bad_certificates;
  }
  const double secs = seconds_since(t0);
  c.check(mismatches == 0, str("200 random graphs (n <= 12): ", mismatches, " mismatches"));
  c.check(bad_certificates == 0, str(bad_certificates, " invalid certificates"));
  c.check(secs < 300.0, str("runtime ", secs, " s (limit 300 s)"));
  return c.report(secs);
}

bool criterion_distributions() {
  auto t0 = Clock::now();
  Criterion c("5 distributional checks");
  for (auto [d, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {8, 2}, {9, 1}}) {
    for (std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
      KsReport rep = overlap_distribution_test({d, r, 100000, seed, 0.0, 1.0, 1});
      c.check(rep.pass, str("d=", d, " r=", r, " seed=", seed, ": D = ", rep.statistic, " < ", rep.critical));
    }
  }
  return c.report(seconds_since(t0));
}

bool criterion_geometry() {
  auto t0 = Clock::now();
  Criterion c("6 geometric checks");
  for (const auto& e : builtin_catalog()) {
    CapHitReport rep = cap_hit_check(load_builtin(e.name), 10000, 6);
    const double bound = 1.0 / e.dimension;
    c.check(rep.minimum >= bound - 1e-9, str("cap hit ", e.name, ": minimum ", rep.minimum, " >= 1/", e.dimension));
  }
  for (int d : {2, 4, 8}) {
    CapIndependenceReport rep = cap_independence_check(d, 100000, 7);
    c.check(rep.violations == 0, str("cap independence d=", d, ": ", rep.violations, " violations"));
  }
  for (const auto& e : builtin_catalog()) {
    VectorSet s = load_builtin(e.name);
    OrthoGraph g = build_graph(s);
    auto contexts = enumerate_contexts(g);
    int invalid = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
      Rng rng(substream_seed(8, k));
      Labeling lab = cap_labeling(s, sample_haar_vector(s.dimension, rng), 1.0 / s.dimension, 0.5);
      invalid += validate_labeling(g, contexts, lab).valid ? 0 : 1;
    }
    c.check(invalid == 0, str("cap labeling ", e.name, ": ", invalid, " invalid of 100 centres"));
  }
  return c.report(seconds_since(t0));
}

bool criterion_structure() {
  auto t0 = Clock::now();
  Criterion c("7 structural properties");
  for (const auto& name : {"cabello18", "peres_mermin24"}) {
    OrthoGraph g = build_graph(load_builtin(name));
    SolveResult single = solve_qs_exact(g, enumerate_contexts(g));
    OrthoGraph both = disjoint_union(g, g).graph;
    SolveResult pair = solve_qs_exact(both, enumerate_contexts(both));
    c.check(single.optimal && pair.optimal && pair.qs == 2 * single.qs,
            str("additivity ", name, ": qs(G u G) = ", pair.qs, ", 2 qs(G) = ", 2 * single.qs));
  }
  std::mt19937_64 rng(77);
  int failures = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + static_cast<int>(rng() % 36);
    OrthoGraph g = kscontext::testing::random_triangle_free(rng, n, 0.25);
    TriangleFreeBound b = triangle_free_bound(g);
    failures += b.gallai_holds ? 0 : 1;
  }
  c.check(failures == 0, str("Gallai identity on 50 random triangle-free graphs (n <= 40): ", failures, " failures"));
  return c.report(seconds_since(t0));
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion_table,        criterion_bounds,   criterion_rank_bound,
                                                    criterion_oracle,       criterion_distributions,
                                                    criterion_geometry,     criterion_structure};
  int failed = 0;
  for (const auto& run : criteria) failed += run() ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
