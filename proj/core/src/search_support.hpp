#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kscontext/bitset.hpp"
#include "kscontext/ortho_graph.hpp"

namespace kscontext::detail {

/// Vertex/context incidence in both directions.
struct ContextIndex {
  int n = 0;
  int m = 0;
  std::vector<Bitset> members;    // per context, over vertices
  std::vector<Bitset> incidence;  // per vertex, over contexts

  ContextIndex(int vertex_count, const std::vector<Context>& contexts)
      : n(vertex_count), m(static_cast<int>(contexts.size())) {
    members.assign(contexts.size(), Bitset(static_cast<std::size_t>(n)));
    incidence.assign(static_cast<std::size_t>(n), Bitset(contexts.size()));
    for (int c = 0; c < m; ++c) {
      for (int v : contexts[c]) {
        if (v < 0 || v >= n) throw std::out_of_range("context vertex out of range");
        members[c].set(v);
        incidence[v].set(c);
      }
    }
  }
};

class Deadline {
 public:
  explicit Deadline(double seconds) : start_(Clock::now()) {
    if (std::isfinite(seconds) && seconds < 1e9) {
      end_ = start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
      bounded_ = true;
    }
  }

  bool expired() const { return bounded_ && Clock::now() >= end_; }

  double elapsed_millis() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_;
  Clock::time_point end_{};
  bool bounded_ = false;
};

/// Lower bound on the number of vertices from `allowed` needed to meet every
/// context in `unhit`: the best of a greedy disjoint packing, a coverage-count
/// bound and a fractional weighting bound.
inline int hitting_lower_bound(const ContextIndex& index, const Bitset& unhit, const Bitset& allowed) {
  const std::size_t remaining = unhit.count();
  if (remaining == 0) return 0;

  // Coverage of each allowed vertex restricted to unhit contexts.
  std::vector<int> cover(static_cast<std::size_t>(index.n), 0);
  std::vector<int> covers;
  allowed.for_each([&](std::size_t v) {
    int c = static_cast<int>(index.incidence[v].count_and(unhit));
    cover[v] = c;
    if (c > 0) covers.push_back(c);
  });
  std::sort(covers.begin(), covers.end(), std::greater<>());
  int count_bound = 0;
  std::size_t acc = 0;
  for (int c : covers) {
    if (acc >= remaining) break;
    acc += static_cast<std::size_t>(c);
    ++count_bound;
  }
  if (acc < remaining) return std::numeric_limits<int>::max() / 4;

  // Each context weighs 1/(largest coverage among its vertices); a vertex
  // collects at most weight 1.
  double weight = 0.0;
  int packing = 0;
  bool dead = false;
  Bitset used(static_cast<std::size_t>(index.n));
  unhit.for_each([&](std::size_t c) {
    Bitset options = index.members[c] & allowed;
    int best = 0;
    options.for_each([&](std::size_t v) { best = std::max(best, cover[v]); });
    if (best == 0) {
      dead = true;
      return;
    }
    weight += 1.0 / best;
    if (!options.intersects(used)) {
      used |= options;
      ++packing;
    }
  });
  if (dead) return std::numeric_limits<int>::max() / 4;
  int weight_bound = static_cast<int>(std::ceil(weight - 1e-9));
  return std::max({count_bound, weight_bound, packing});
}

}  // namespace kscontext::detail
