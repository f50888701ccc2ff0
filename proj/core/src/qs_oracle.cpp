#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "kscontext/solver.hpp"

namespace kscontext {

SolveResult brute_force_qs(const OrthoGraph& g, const std::vector<Context>& contexts) {
  const int n = g.size();
  if (n > 15) throw std::invalid_argument("brute_force_qs: n = " + std::to_string(n) + " exceeds 15");
  std::vector<std::uint32_t> context_masks;
  for (const auto& c : contexts) {
    std::uint32_t m = 0;
    for (int v : c) m |= 1U << v;
    context_masks.push_back(m);
  }
  std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adjacency[u] |= 1U << v;
    adjacency[v] |= 1U << u;
  }
  const std::uint32_t all = (1U << n) - 1;

  // Every labeling is a 1-set plus a disjoint C-set. Labelings whose 1-set is not
  // independent are invalid, so only those 1-sets are expanded.
  int best = n + 1;
  std::uint32_t best_one = 0;
  std::uint32_t best_c = 0;
  std::uint64_t visited = 0;
  for (std::uint32_t one = 0;; ++one) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v) {
      if ((one >> v & 1U) != 0 && (adjacency[v] & one) != 0) independent = false;
    }
    if (independent) {
      const std::uint32_t rest = all & ~one;
      for (std::uint32_t c = rest;; c = (c - 1) & rest) {
        ++visited;
        const int k = std::popcount(c);
        if (k < best) {
          bool valid = true;
          for (auto m : context_masks) {
            if ((m & (one | c)) == 0) {
              valid = false;
              break;
            }
          }
          if (valid) {
            best = k;
            best_one = one;
            best_c = c;
          }
        }
        if (c == 0) break;
      }
    }
    if (one == all) break;
  }

  Labeling labeling(static_cast<std::size_t>(n), Label::kZero);
  for (int v = 0; v < n; ++v) {
    if ((best_one >> v & 1U) != 0) labeling[v] = Label::kOne;
    if ((best_c >> v & 1U) != 0) labeling[v] = Label::kContextual;
  }
  SolveResult r = result_from_labeling(std::move(labeling));
  r.optimal = true;
  r.stats.nodes = visited;
  r.stats.lower_bound = r.qs;
  return r;
}

}  // namespace kscontext
