#include <algorithm>

#include "kscontext/solver.hpp"
#include "search_support.hpp"

namespace kscontext {

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(const detail::ContextIndex& index, double timeout) : index_(index), deadline_(timeout) {}

  TransversalResult run() {
    Bitset unhit = Bitset::full(static_cast<std::size_t>(index_.m));
    Bitset allowed = Bitset::full(static_cast<std::size_t>(index_.n));
    best_ = greedy(unhit);
    root_bound_ = detail::hitting_lower_bound(index_, unhit, allowed);
    std::vector<int> chosen;
    if (static_cast<int>(best_.size()) > root_bound_) search(unhit, allowed, chosen);

    TransversalResult result;
    result.vertices = best_;
    std::sort(result.vertices.begin(), result.vertices.end());
    result.optimal = !timed_out_;
    result.lower_bound = timed_out_ ? std::min<int>(root_bound_, static_cast<int>(best_.size()))
                                    : static_cast<int>(best_.size());
    result.nodes = nodes_;
    return result;
  }

 private:
  // Repeatedly take the vertex meeting the most unhit contexts (lowest index on ties).
  std::vector<int> greedy(Bitset unhit) const {
    std::vector<int> picked;
    while (unhit.any()) {
      int best = -1;
      std::size_t best_cover = 0;
      for (int v = 0; v < index_.n; ++v) {
        std::size_t c = index_.incidence[v].count_and(unhit);
        if (c > best_cover) {
          best_cover = c;
          best = v;
        }
      }
      picked.push_back(best);
      unhit.subtract(index_.incidence[best]);
    }
    return picked;
  }

  void search(const Bitset& unhit, Bitset allowed, std::vector<int>& chosen) {
    if (timed_out_) return;
    if ((++nodes_ & 1023U) == 0 && deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    if (unhit.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const int depth = static_cast<int>(chosen.size());
    if (depth + detail::hitting_lower_bound(index_, unhit, allowed) >= static_cast<int>(best_.size())) return;

    // Branch on the unhit context with the fewest remaining options.
    int pick = -1;
    std::size_t fewest = 0;
    unhit.for_each([&](std::size_t c) {
      std::size_t k = index_.members[c].count_and(allowed);
      if (pick < 0 || k < fewest) {
        pick = static_cast<int>(c);
        fewest = k;
      }
    });
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, int>> options;
    (index_.members[pick] & allowed).for_each([&](std::size_t v) {
      options.emplace_back(index_.incidence[v].count_and(unhit), static_cast<int>(v));
    });
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (auto [cover, v] : options) {
      chosen.push_back(v);
      search(unhit - index_.incidence[v], allowed, chosen);
      chosen.pop_back();
      // Later branches of this context exclude v.
      allowed.reset(static_cast<std::size_t>(v));
      if (timed_out_) return;
    }
  }

  const detail::ContextIndex& index_;
  detail::Deadline deadline_;
  std::vector<int> best_;
  int root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

TransversalResult min_transversal(const OrthoGraph& g, const std::vector<Context>& contexts, double timeout_seconds) {
  detail::ContextIndex index(g.size(), contexts);
  for (const auto& c : index.members) {
    if (c.none()) throw std::invalid_argument("min_transversal: empty context cannot be hit");
  }
  return HittingSetSearch(index, timeout_seconds).run();
}

TransversalResult min_vertex_cover(const OrthoGraph& g, double timeout_seconds) {
  std::vector<Context> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return min_transversal(g, edges, timeout_seconds);
}

}  // namespace kscontext
