#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kscontext/bounds.hpp"
#include "kscontext/catalog.hpp"
#include "kscontext/error.hpp"
#include "kscontext/montecarlo.hpp"
#include "kscontext/ortho_graph.hpp"
#include "kscontext/solver.hpp"

using namespace kscontext;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

int default_threads() {
  if (const char* env = std::getenv("KSCONTEXT_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string decimal(double x) {
  std::ostringstream out;
  out << std::setprecision(6) << x;
  return out.str();
}

std::string exact_and_decimal(const mpq_class& q) { return q.get_str() + " ≈ " + decimal(q.get_d()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(InputErrorKind::kSyntax, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text << "\n";
}

struct Source {
  std::string set;
  std::string in;

  void add_to(CLI::App* cmd) {
    auto* s = cmd->add_option("--set", set, "Built-in vector set name");
    auto* i = cmd->add_option("--in", in, "Vector-set or graph JSON file");
    s->excludes(i);
    i->excludes(s);
  }

  VectorSet vectors() const {
    if (!set.empty()) return load_builtin(set);
    if (in.empty()) throw CLI::RequiredError("--set or --in");
    return parse_vector_set(read_file(in));
  }

  // A graph file carries "edges"; a vector-set file carries "rays".
  OrthoGraph graph() const {
    if (set.empty() && in.empty()) throw CLI::RequiredError("--set or --in");
    if (!set.empty() || json_has_rays()) return build_graph(vectors());
    return parse_graph_json(read_file(in));
  }

 private:
  bool json_has_rays() const {
    if (in.empty()) return false;
    try {
      return json::parse(read_file(in)).contains("rays");
    } catch (const json::exception&) {
      return true;
    }
  }
};

std::string labeling_json(const Labeling& labeling, const ValidationReport& report) {
  json labels = json::array();
  for (Label l : labeling) labels.push_back(std::string(1, label_char(l)));
  json doc = {{"labeling", labels}, {"valid", report.valid}};
  if (!report.valid) doc["violation"] = report.violation;
  return doc.dump();
}

struct TableRow {
  std::string name;
  int d = 0;
  int n = 0;
  std::string transversal;
  std::string independence;
  std::string merit;
  std::string status;
};

int reproduce_table(double timeout, std::uint64_t seed, std::uint64_t budget) {
  std::vector<TableRow> rows;
  bool all_optimal = true;
  for (const auto& entry : builtin_catalog()) {
    const OrthoGraph g = build_graph(load_builtin(entry.name));
    const auto contexts = enumerate_contexts(g);
    TableRow row{entry.name, entry.dimension, g.size(), "", "", "", ""};
    row.independence = std::to_string(max_independent_set(g).size());
    if (entry.name == "e8") {
      SolveResult r = solve_qs_heuristic(g, contexts, budget, seed);
      row.transversal = "≤ " + std::to_string(r.transversal.size());
      row.merit = "≤ " + exact_and_decimal(r.q());
      row.status = "heuristic-upper-bound (seed " + std::to_string(*r.stats.seed) + ")";
    } else {
      ExactOptions options;
      options.timeout_seconds = timeout;
      SolveResult r = solve_qs_exact(g, contexts, options);
      TransversalResult tau = min_transversal(g, contexts, timeout);
      const bool exact = r.optimal && tau.optimal;
      all_optimal = all_optimal && exact;
      row.transversal = (tau.optimal ? "" : "≤ ") + std::to_string(tau.vertices.size());
      row.merit = (r.optimal ? "" : "≤ ") + exact_and_decimal(r.q());
      row.status = exact ? "exact" : "timeout (qs ≥ " + std::to_string(r.stats.lower_bound) + ")";
    }
    rows.push_back(std::move(row));
  }
  std::cout << std::left << std::setw(16) << "name" << std::setw(4) << "d" << std::setw(6) << "n" << std::setw(14)
            << "transversal" << std::setw(14) << "independence" << std::setw(28) << "figure of merit"
            << "status\n";
  for (const auto& r : rows) {
    // setw counts bytes, so pad the multibyte "≤" columns by hand.
    auto pad = [](const std::string& s, std::size_t w) {
      std::size_t extra = 0;
      for (std::size_t p = s.find("≤"); p != std::string::npos; p = s.find("≤", p + 1)) extra += 2;
      return s + std::string(w + extra > s.size() ? w + extra - s.size() : 1, ' ');
    };
    std::cout << std::setw(16) << r.name << std::setw(4) << r.d << std::setw(6) << r.n << pad(r.transversal, 14)
              << pad(r.independence, 14) << pad(r.merit, 28) << r.status << "\n";
  }
  return all_optimal ? 0 : kExitTimeout;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextuality figures of merit for Kochen-Specker orthogonality graphs"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "Worker thread cap (default: $KSCONTEXT_THREADS or hardware)")
      ->check(CLI::PositiveNumber);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Built-in vector sets");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List names, ray counts and dimensions");

  // graph
  auto* graph = app.add_subcommand("graph", "Build and export an orthogonality graph");
  Source graph_src;
  graph_src.add_to(graph);
  std::string graph_out;
  std::string graph_format = "json";
  graph->add_option("--out", graph_out, "Output file (default stdout)");
  graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  // solve
  auto* solve = app.add_subcommand("solve", "Compute q_s and q");
  Source solve_src;
  solve_src.add_to(solve);
  std::string mode = "exact";
  double timeout = 600.0;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  int seeds = 1;
  std::string solve_out;
  solve->add_option("--mode", mode, "exact, heuristic or oracle")->check(CLI::IsMember({"exact", "heuristic", "oracle"}));
  solve->add_option("--timeout", timeout, "Exact-mode time limit in seconds")->check(CLI::NonNegativeNumber);
  solve->add_option("--budget", budget, "Heuristic moves per seed");
  auto* seed_opt = solve->add_option("--seed", seed, "Heuristic seed (required for --mode heuristic)");
  solve->add_option("--seeds", seeds, "Heuristic portfolio size: seeds seed..seed+N-1")->check(CLI::PositiveNumber);
  solve->add_option("--out", solve_out, "Write the result JSON here instead of stdout");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form upper bounds");
  bounds->require_subcommand(1);
  int bd = 0;
  int br = 0;
  int dmax = 0;
  auto* rank1 = bounds->add_subcommand("rank1", "(1-1/d)^(d-1) - 2^-(d-1)");
  rank1->add_option("--d", bd, "Dimension")->required();
  auto* rank = bounds->add_subcommand("rank", "I_1/2(r, d-r) - I_r/d(r, d-r)");
  rank->add_option("--d", bd, "Dimension")->required();
  rank->add_option("--r", br, "Projector rank")->required();
  auto* scan = bounds->add_subcommand("scan", "CSV of the rank-1 bound for d = 2..dmax");
  scan->add_option("--dmax", dmax, "Largest dimension")->required();
  auto* half = bounds->add_subcommand("half", "Check rank bounds stay below 1/2 for d <= dmax");
  half->add_option("--dmax", dmax, "Largest dimension")->required();

  // mc
  auto* mc = app.add_subcommand("mc", "Seeded Monte Carlo experiments (JSON reports)");
  mc->require_subcommand(1);
  McConfig cfg;
  std::uint64_t trials = 10000;
  Source mc_src;
  std::string t1_text;
  std::string t2_text;
  std::string mc_out;
  auto* beta = mc->add_subcommand("beta", "KS test of rank-r overlaps against Beta(r, d-r)");
  beta->add_option("--d", cfg.d, "Dimension")->required();
  beta->add_option("--r", cfg.r, "Projector rank");
  beta->add_option("--samples", cfg.samples, "Sample count");
  beta->add_option("--seed", cfg.seed, "Seed")->required();
  auto* caphit = mc->add_subcommand("caphit", "Minimum over trials of the largest basis overlap");
  mc_src.add_to(caphit);
  caphit->add_option("--trials", trials, "Random centres");
  caphit->add_option("--seed", cfg.seed, "Seed")->required();
  auto* capind = mc->add_subcommand("capind", "Orthogonal pairs never both above 1/2");
  capind->add_option("--d", cfg.d, "Dimension")->required();
  capind->add_option("--trials", trials, "Trials");
  capind->add_option("--seed", cfg.seed, "Seed")->required();
  auto* annulus = mc->add_subcommand("annulus", "Captured fraction under Haar rotations");
  mc_src.add_to(annulus);
  annulus->add_option("--t1", t1_text, "Lower threshold (default 1/d)");
  annulus->add_option("--t2", t2_text, "Upper threshold (default 1/2)");
  annulus->add_option("--trials", trials, "Rotations");
  annulus->add_option("--seed", cfg.seed, "Seed")->required();
  auto* label = mc->add_subcommand("label", "Cap labeling around a seeded random centre");
  mc_src.add_to(label);
  label->add_option("--t1", t1_text, "Lower threshold (default 1/d)");
  label->add_option("--t2", t2_text, "Upper threshold (default 1/2)");
  label->add_option("--seed", cfg.seed, "Seed")->required();
  for (auto* sub : {beta, caphit, capind, annulus, label}) sub->add_option("--out", mc_out, "Output file");

  // reproduce-table
  auto* table = app.add_subcommand("reproduce-table", "Recompute the comparison table for the built-in sets");
  double table_timeout = 600.0;
  std::uint64_t table_seed = 1;
  std::uint64_t table_budget = 1000000;
  table->add_option("--timeout", table_timeout, "Exact-solve time limit per set");
  table->add_option("--seed", table_seed, "Heuristic seed for e8");
  table->add_option("--budget", table_budget, "Heuristic moves for e8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  // Thresholds accept fractions such as 1/3.
  auto threshold = [](const std::string& text, double fallback) {
    if (text.empty()) return fallback;
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad threshold: " + text);
    q.canonicalize();
    return q.get_d();
  };

  try {
    if (*catalog_list) {
      for (const auto& e : builtin_catalog()) {
        std::cout << std::left << std::setw(16) << e.name << std::setw(6) << e.ray_count << "d=" << e.dimension
                  << "  " << e.description << "\n";
      }
      return 0;
    }
    if (*graph) {
      const OrthoGraph g = graph_src.graph();
      emit(export_graph(g, graph_format == "dot" ? GraphFormat::kDot : GraphFormat::kJson), graph_out);
      return 0;
    }
    if (*solve) {
      if (mode == "heuristic" && seed_opt->count() == 0) {
        std::cerr << "--seed is required for --mode heuristic\n";
        return kExitUsage;
      }
      const OrthoGraph g = solve_src.graph();
      const auto contexts = enumerate_contexts(g);
      SolveResult r;
      if (mode == "exact") {
        ExactOptions options;
        options.timeout_seconds = timeout;
        r = solve_qs_exact(g, contexts, options);
      } else if (mode == "heuristic") {
        r = solve_qs_portfolio(g, contexts, budget, seed, seeds, threads);
      } else {
        r = brute_force_qs(g, contexts);
      }
      emit(to_json(r), solve_out);
      if (!solve_out.empty()) {
        std::cout << "qs=" << r.qs << " q=" << exact_and_decimal(r.q()) << " optimal=" << std::boolalpha << r.optimal
                  << "\n";
      }
      return mode == "exact" && !r.optimal ? kExitTimeout : 0;
    }
    if (*rank1) {
      std::cout << exact_and_decimal(theorem1_bound(bd)) << "\n";
      return 0;
    }
    if (*rank) {
      std::cout << exact_and_decimal(rank_bound_exact(bd, br)) << "\n";
      return 0;
    }
    if (*scan) {
      if (dmax < 2) throw std::invalid_argument("--dmax must be at least 2");
      std::cout << "d,bound_exact,bound\n";
      for (int d = 2; d <= dmax; ++d) {
        mpq_class b = theorem1_bound(d);
        std::cout << d << "," << b.get_str() << "," << std::setprecision(17) << b.get_d() << "\n";
      }
      return 0;
    }
    if (*half) {
      CorollaryReport rep = verify_half_corollary(dmax);
      std::cout << "holds=" << std::boolalpha << rep.holds << " median_holds=" << rep.median_holds << "\n"
                << "worst d=" << rep.worst.d << " r=" << rep.worst.r << " value=" << exact_and_decimal(rep.worst.value)
                << " margin=" << decimal(rep.margin) << "\n";
      return 0;
    }
    if (*beta) {
      cfg.threads = threads;
      emit(to_json(overlap_distribution_test(cfg)), mc_out);
      return 0;
    }
    if (*caphit) {
      emit(to_json(cap_hit_check(mc_src.vectors(), trials, cfg.seed, threads)), mc_out);
      return 0;
    }
    if (*capind) {
      emit(to_json(cap_independence_check(cfg.d, trials, cfg.seed, threads)), mc_out);
      return 0;
    }
    if (*annulus) {
      const VectorSet set = mc_src.vectors();
      const double t1 = threshold(t1_text, 1.0 / set.dimension);
      const double t2 = threshold(t2_text, 0.5);
      emit(to_json(annulus_capture_experiment(set, t1, t2, trials, cfg.seed, threads)), mc_out);
      return 0;
    }
    if (*label) {
      const VectorSet set = mc_src.vectors();
      const double t1 = threshold(t1_text, 1.0 / set.dimension);
      const double t2 = threshold(t2_text, 0.5);
      Rng rng(substream_seed(cfg.seed, 0));
      const Labeling lab = cap_labeling(set, sample_haar_vector(set.dimension, rng), t1, t2);
      const OrthoGraph g = build_graph(set);
      emit(labeling_json(lab, validate_labeling(g, enumerate_contexts(g), lab)), mc_out);
      return 0;
    }
    if (*table) return reproduce_table(table_timeout, table_seed, table_budget);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
