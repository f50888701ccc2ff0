#include <stdexcept>

#include "kscontext/solver.hpp"

namespace kscontext {

std::vector<int> max_independent_set(const OrthoGraph& g) {
  if (g.size() == 0) return {};
  return maximum_clique(complement(g));
}

TriangleFreeBound triangle_free_bound(const OrthoGraph& g) {
  if (!is_triangle_free(g)) throw std::invalid_argument("triangle_free_bound: graph contains a triangle");
  TriangleFreeBound b;
  const int n = g.size();
  b.alpha = static_cast<int>(max_independent_set(g).size());
  b.raw = n - 2 * b.alpha;
  b.clamped = b.raw > 0 ? b.raw : 0;
  TransversalResult cover = min_vertex_cover(g);
  b.vertex_cover = static_cast<int>(cover.vertices.size());
  b.gallai_holds = cover.optimal && b.vertex_cover == n - b.alpha;
  return b;
}

}  // namespace kscontext
