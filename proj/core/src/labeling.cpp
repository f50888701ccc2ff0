#include <stdexcept>

#include "kscontext/solver.hpp"

namespace kscontext {

char label_char(Label l) {
  switch (l) {
    case Label::kZero: return '0';
    case Label::kContextual: return 'C';
    case Label::kOne: return '1';
  }
  return '?';
}

ValidationReport validate_labeling(const OrthoGraph& g, const std::vector<Context>& contexts,
                                   const Labeling& labeling) {
  if (labeling.size() != static_cast<std::size_t>(g.size())) {
    throw std::invalid_argument("labeling length " + std::to_string(labeling.size()) + " differs from graph size " +
                                std::to_string(g.size()));
  }
  ValidationReport report;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    bool hit = false;
    for (int v : contexts[c]) hit = hit || labeling[v] != Label::kZero;
    if (!hit) {
      report.valid = false;
      report.unhit_context = static_cast<int>(c);
      report.violation = "context " + std::to_string(c) + " has no C or 1 label";
      return report;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (labeling[u] == Label::kOne && labeling[v] == Label::kOne) {
      report.valid = false;
      report.one_one_edge = std::make_pair(u, v);
      report.violation = "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " are both 1";
      return report;
    }
  }
  return report;
}

mpq_class SolveResult::q() const {
  if (n == 0) return 0;
  mpq_class q(qs, n);
  q.canonicalize();
  return q;
}

SolveResult result_from_labeling(Labeling labeling) {
  SolveResult r;
  r.n = static_cast<int>(labeling.size());
  for (int v = 0; v < r.n; ++v) {
    if (labeling[v] == Label::kZero) continue;
    r.transversal.push_back(v);
    if (labeling[v] == Label::kOne) {
      r.independent_part.push_back(v);
    } else {
      ++r.qs;
    }
  }
  r.labeling = std::move(labeling);
  return r;
}

}  // namespace kscontext
