#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "kscontext/solver.hpp"
#include "search_support.hpp"

namespace kscontext {

namespace {

class LocalSearch {
 public:
  LocalSearch(const OrthoGraph& g, const std::vector<Context>& contexts, std::uint64_t seed)
      : contexts_(contexts),
        n_(g.size()),
        rng_(seed),
        label_(static_cast<std::size_t>(n_), Label::kZero),
        hits_(contexts.size(), 0),
        one_neighbors_(static_cast<std::size_t>(n_), 0),
        incidence_(static_cast<std::size_t>(n_)) {
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      for (int v : contexts[c]) incidence_[v].push_back(static_cast<int>(c));
    }
    for (int v = 0; v < n_; ++v) neighbor_list_.push_back(g.neighbors(v).to_vector());
    unhit_ = static_cast<int>(contexts.size());
  }

  Labeling run(std::uint64_t budget) {
    repair(-1);
    cleanup();
    journal_.clear();
    Labeling best = label_;
    int best_c = c_count_;
    if (n_ == 0 || budget == 0 || best_c == 0) return polish(best);

    const double t0 = 0.6;
    const double t1 = 0.02;
    std::uniform_int_distribution<int> pick_vertex(0, n_ - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint64_t step = 0; step < budget; ++step) {
      const double temperature = t0 * std::pow(t1 / t0, static_cast<double>(step) / static_cast<double>(budget));
      const int before = c_count_;
      const int v = pick_vertex(rng_);
      const Label old = label_[v];
      Label target;
      if (old == Label::kZero) {
        target = coin(rng_) != 0 ? Label::kOne : Label::kContextual;
      } else if (old == Label::kContextual) {
        target = coin(rng_) != 0 ? Label::kOne : Label::kZero;
      } else {
        target = coin(rng_) != 0 ? Label::kZero : Label::kContextual;
      }
      apply_move(v, target);
      const int delta = c_count_ - before;
      if (delta <= 0 || unit(rng_) < std::exp(-delta / temperature)) {
        journal_.clear();
        if (c_count_ < best_c) {
          best_c = c_count_;
          best = label_;
          if (best_c == 0) break;
        }
      } else {
        undo();
      }
    }
    return polish(best);
  }

 private:
  void set(int v, Label l) {
    const Label old = label_[v];
    if (old == l) return;
    journal_.emplace_back(v, old);
    assign(v, l);
  }

  void assign(int v, Label l) {
    const Label old = label_[v];
    if (old == Label::kZero) {
      for (int c : incidence_[v]) {
        if (hits_[c]++ == 0) --unhit_;
      }
    }
    if (l == Label::kZero) {
      for (int c : incidence_[v]) {
        if (--hits_[c] == 0) ++unhit_;
      }
    }
    if (old == Label::kOne) {
      for (int u : neighbor_list_[v]) --one_neighbors_[u];
    }
    if (l == Label::kOne) {
      for (int u : neighbor_list_[v]) ++one_neighbors_[u];
    }
    if (old == Label::kContextual) --c_count_;
    if (l == Label::kContextual) ++c_count_;
    label_[v] = l;
  }

  void undo() {
    while (!journal_.empty()) {
      auto [v, l] = journal_.back();
      journal_.pop_back();
      assign(v, l);
    }
  }

  void apply_move(int v, Label target) {
    if (target == Label::kOne) {
      for (int u : neighbor_list_[v]) {
        if (label_[u] == Label::kOne) set(u, Label::kContextual);
      }
    }
    set(v, target);
    if (target == Label::kZero) repair(v);
    cleanup();
  }

  int unhit_cover(int u) const {
    int k = 0;
    for (int c : incidence_[u]) k += hits_[c] == 0 ? 1 : 0;
    return k;
  }

  // Hits every unhit context, preferring vertices that may become 1 and then the
  // widest coverage of unhit contexts; `avoid` is used only as a last resort.
  void repair(int avoid) {
    if (unhit_ == 0) return;
    for (std::size_t c = 0; c < contexts_.size(); ++c) {
      if (hits_[c] != 0) continue;
      int chosen = -1;
      long best_score = -1;
      int ties = 0;
      for (int u : contexts_[c]) {
        if (u == avoid) continue;
        long score = unhit_cover(u) + (one_neighbors_[u] == 0 ? 1000L : 0L);
        if (score > best_score) {
          best_score = score;
          chosen = u;
          ties = 1;
        } else if (score == best_score && std::uniform_int_distribution<int>(0, ties++)(rng_) == 0) {
          chosen = u;
        }
      }
      if (chosen < 0) chosen = avoid;
      set(chosen, one_neighbors_[chosen] == 0 ? Label::kOne : Label::kContextual);
    }
  }

  bool redundant(int v) const {
    for (int c : incidence_[v]) {
      if (hits_[c] < 2) return false;
    }
    return true;
  }

  // Promotes C vertices with no 1 neighbour and drops C vertices whose contexts
  // are all hit twice.
  void cleanup() {
    for (int v = 0; v < n_; ++v) {
      if (label_[v] != Label::kContextual) continue;
      if (one_neighbors_[v] == 0) {
        set(v, Label::kOne);
      } else if (redundant(v)) {
        set(v, Label::kZero);
      }
    }
  }

  Labeling polish(Labeling best) {
    journal_.clear();
    for (int v = 0; v < n_; ++v) assign(v, best[v]);
    cleanup();
    for (int v = 0; v < n_; ++v) {
      if (label_[v] == Label::kOne && redundant(v)) set(v, Label::kZero);
    }
    cleanup();
    // Extend the 1 labels to a maximal independent set.
    for (int v = 0; v < n_; ++v) {
      if (label_[v] == Label::kZero && one_neighbors_[v] == 0) set(v, Label::kOne);
    }
    journal_.clear();
    return label_;
  }

  const std::vector<Context>& contexts_;
  int n_;
  std::mt19937_64 rng_;
  Labeling label_;
  std::vector<int> hits_;
  std::vector<int> one_neighbors_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::vector<int>> neighbor_list_;
  std::vector<std::pair<int, Label>> journal_;
  int unhit_ = 0;
  int c_count_ = 0;
};

}  // namespace

SolveResult solve_qs_heuristic(const OrthoGraph& g, const std::vector<Context>& contexts, std::uint64_t budget,
                               std::uint64_t seed) {
  detail::Deadline clock(std::numeric_limits<double>::infinity());
  for (const auto& c : contexts) {
    if (c.empty()) throw std::invalid_argument("empty context");
    for (int v : c) {
      if (v < 0 || v >= g.size()) throw std::out_of_range("context vertex out of range");
    }
  }
  LocalSearch search(g, contexts, seed);
  SolveResult r = result_from_labeling(search.run(budget));
  r.optimal = false;
  r.stats.nodes = budget;
  r.stats.seed = seed;
  r.stats.millis = clock.elapsed_millis();
  return r;
}

SolveResult solve_qs_portfolio(const OrthoGraph& g, const std::vector<Context>& contexts, std::uint64_t budget,
                               std::uint64_t seed0, int seeds, int threads) {
  if (seeds < 1) throw std::invalid_argument("solve_qs_portfolio: seeds must be positive");
  std::vector<SolveResult> results(static_cast<std::size_t>(seeds));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < seeds; k = next++) {
      results[k] = solve_qs_heuristic(g, contexts, budget, seed0 + static_cast<std::uint64_t>(k));
    }
  };
  const int workers = std::clamp(threads, 1, seeds);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].qs < results[best].qs) best = k;
  }
  return results[best];
}

}  // namespace kscontext
