#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kscontext/solver.hpp"
#include "search_support.hpp"

namespace kscontext {

namespace {

constexpr std::uint64_t kWarmStartSeed = 0x6b73636f6e746578ULL;

// Depth-first search over {0, C, 1} labelings. Each node picks the unhit context
// with the fewest undecided vertices and branches on which of them is the first
// non-zero one; that vertex is tried as 1 (when no neighbour is 1) before C.
class LabelSearch {
 public:
  LabelSearch(const OrthoGraph& g, const detail::ContextIndex& index, double timeout)
      : g_(g), index_(index), deadline_(timeout), labels_(static_cast<std::size_t>(g.size()), Label::kZero) {}

  /// Searches for a labeling with fewer than `bound` C labels.
  void run(int bound) {
    best_ = bound;
    const auto n = static_cast<std::size_t>(g_.size());
    search(Bitset::full(static_cast<std::size_t>(index_.m)), Bitset::full(n), Bitset(n), 0);
  }

  bool found() const { return found_; }
  bool timed_out() const { return timed_out_; }
  int best() const { return best_; }
  const Labeling& best_labeling() const { return best_labeling_; }
  std::uint64_t nodes() const { return nodes_; }
  double millis() const { return deadline_.elapsed_millis(); }

 private:
  void search(const Bitset& unhit, Bitset free, const Bitset& blocked, int c_count) {
    if (timed_out_) return;
    if ((++nodes_ & 1023U) == 0 && deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    if (unhit.none()) {
      best_ = c_count;
      found_ = true;
      best_labeling_ = labels_;
      free.for_each([&](std::size_t v) { best_labeling_[v] = Label::kZero; });
      return;
    }
    if (c_count >= best_) return;

    // Contexts without a vertex that may still become 1 must be hit by C labels.
    const Bitset eligible = free - blocked;
    Bitset forced(static_cast<std::size_t>(index_.m));
    int pick = -1;
    std::size_t fewest = 0;
    bool dead = false;
    unhit.for_each([&](std::size_t c) {
      if (dead) return;
      std::size_t k = index_.members[c].count_and(free);
      if (k == 0) {
        dead = true;
        return;
      }
      if (!index_.members[c].intersects(eligible)) forced.set(c);
      if (pick < 0 || k < fewest) {
        pick = static_cast<int>(c);
        fewest = k;
      }
    });
    if (dead) return;
    if (forced.any() && c_count + detail::hitting_lower_bound(index_, forced, free) >= best_) return;

    std::vector<std::pair<std::size_t, int>> options;
    (index_.members[pick] & free).for_each([&](std::size_t v) {
      options.emplace_back(index_.incidence[v].count_and(unhit), static_cast<int>(v));
    });
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (auto [cover, v] : options) {
      const auto u = static_cast<std::size_t>(v);
      free.reset(u);
      const Bitset rest = unhit - index_.incidence[u];
      if (!blocked.test(u)) {
        labels_[u] = Label::kOne;
        search(rest, free, blocked | g_.neighbors(v), c_count);
      }
      if (c_count + 1 < best_) {
        labels_[u] = Label::kContextual;
        search(rest, free, blocked, c_count + 1);
      }
      // Remaining branches label v as 0.
      labels_[u] = Label::kZero;
      if (timed_out_) return;
    }
  }

  const OrthoGraph& g_;
  const detail::ContextIndex& index_;
  detail::Deadline deadline_;
  Labeling labels_;
  Labeling best_labeling_;
  int best_ = std::numeric_limits<int>::max();
  bool found_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

void check_contexts(const OrthoGraph& g, const std::vector<Context>& contexts) {
  if (contexts.empty()) throw std::invalid_argument("at least one context is required");
  for (const auto& c : contexts) {
    if (c.empty()) throw std::invalid_argument("empty context");
    for (int v : c) {
      if (v < 0 || v >= g.size()) throw std::out_of_range("context vertex out of range");
    }
  }
}

}  // namespace

SolveResult solve_qs_exact(const OrthoGraph& g, const std::vector<Context>& contexts, const ExactOptions& options) {
  check_contexts(g, contexts);
  detail::Deadline clock(options.timeout_seconds);
  detail::ContextIndex index(g.size(), contexts);

  SolveResult best = solve_qs_heuristic(g, contexts, options.warm_start_budget, kWarmStartSeed);
  std::uint64_t nodes = 0;

  int lower = 0;
  if (best.qs > 0) {
    const int alpha = static_cast<int>(max_independent_set(g).size());
    const double left = std::max(0.0, options.timeout_seconds - clock.elapsed_millis() / 1000.0);
    TransversalResult tau = min_transversal(g, contexts, left);
    nodes += tau.nodes;
    lower = std::max(0, tau.lower_bound - alpha);
  }

  bool optimal = best.qs <= lower;
  if (!optimal) {
    const double left = std::max(0.0, options.timeout_seconds - clock.elapsed_millis() / 1000.0);
    LabelSearch search(g, index, left);
    search.run(best.qs);
    nodes += search.nodes();
    if (search.found()) {
      Labeling labeling = search.best_labeling();
      best = result_from_labeling(std::move(labeling));
    }
    optimal = !search.timed_out();
    if (optimal) lower = best.qs;
  }

  best.optimal = optimal;
  best.stats = SolveStats{};
  best.stats.nodes = nodes;
  best.stats.millis = clock.elapsed_millis();
  best.stats.lower_bound = optimal ? best.qs : lower;
  return best;
}

bool ks_noncontextually_colorable(const OrthoGraph& g, const std::vector<Context>& contexts) {
  check_contexts(g, contexts);
  detail::ContextIndex index(g.size(), contexts);
  LabelSearch search(g, index, std::numeric_limits<double>::infinity());
  search.run(1);
  return search.found();
}

}  // namespace kscontext
