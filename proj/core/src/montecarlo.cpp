#include "kscontext/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <json.hpp>

#include "kscontext/bounds.hpp"
#include "kscontext/ortho_graph.hpp"

namespace kscontext {

using nlohmann::json;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Calls fn(k) for k in [0, trials), split into contiguous blocks per worker.
template <typename F>
void for_trials(std::uint64_t trials, int threads, F&& fn) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads < 1 ? 1 : threads, 1, std::max<std::uint64_t>(trials, 1));
  if (workers == 1) {
    for (std::uint64_t k = 0; k < trials; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t k = lo; k < hi; ++k) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

std::complex<double> gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

void check_dimension(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
}

// <0| g psi> for each ray: the first row of g applied to the ray.
std::vector<double> first_row_overlaps(const ComplexMatrix& g, const std::vector<ComplexVector>& rays) {
  std::vector<double> out;
  out.reserve(rays.size());
  for (const auto& psi : rays) {
    std::complex<double> s = 0.0;
    for (int j = 0; j < g.d; ++j) s += g(0, j) * psi[j];
    out.push_back(std::norm(s));
  }
  return out;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.d; ++i) {
    json row = json::array();
    for (int j = 0; j < m.d; ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

json config_json(const McConfig& c) {
  return {{"d", c.d}, {"r", c.r}, {"samples", c.samples}, {"seed", c.seed}, {"t1", c.t1}, {"t2", c.t2}};
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

ComplexVector sample_haar_vector(int d, Rng& rng) {
  check_dimension(d);
  ComplexVector v(static_cast<std::size_t>(d));
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& z : v) {
      z = gaussian(rng);
      norm2 += std::norm(z);
    }
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= scale;
  return v;
}

ComplexMatrix haar_unitary(int d, Rng& rng) {
  check_dimension(d);
  Eigen::MatrixXcd g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = gaussian(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  ComplexMatrix u{d, std::vector<std::complex<double>>(static_cast<std::size_t>(d * d))};
  for (int j = 0; j < d; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double m = std::abs(rjj);
    const std::complex<double> phase = m == 0.0 ? std::complex<double>(1.0) : rjj / m;
    for (int i = 0; i < d; ++i) u(i, j) = q(i, j) * phase;
  }
  return u;
}

std::vector<ComplexVector> normalized_rays(const VectorSet& set) {
  std::vector<ComplexVector> out;
  out.reserve(set.size());
  for (const auto& ray : set.rays) {
    ComplexVector v;
    double norm2 = 0.0;
    for (const auto& x : ray) {
      v.push_back(x.to_complex());
      norm2 += std::norm(v.back());
    }
    if (norm2 == 0.0) throw std::invalid_argument("zero ray");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& z : v) z *= scale;
    out.push_back(std::move(v));
  }
  return out;
}

double overlap(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("overlap: dimension mismatch");
  std::complex<double> s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return std::norm(s);
}

KsReport overlap_distribution_test(const McConfig& cfg) {
  if (cfg.r < 1 || cfg.r >= cfg.d) throw std::invalid_argument("overlap test requires 1 <= r < d");
  if (cfg.samples < 1) throw std::invalid_argument("at least one sample is required");
  std::vector<double> t(cfg.samples);
  for_trials(cfg.samples, cfg.threads, [&](std::uint64_t k) {
    Rng rng(substream_seed(cfg.seed, k));
    ComplexVector psi = sample_haar_vector(cfg.d, rng);
    double s = 0.0;
    for (int j = 0; j < cfg.r; ++j) s += std::norm(psi[j]);
    t[k] = std::min(1.0, s);
  });
  std::sort(t.begin(), t.end());
  const double n = static_cast<double>(cfg.samples);
  double stat = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double f = reg_inc_beta(t[i], cfg.r, cfg.d - cfg.r);
    stat = std::max({stat, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  KsReport report;
  report.config = cfg;
  report.statistic = stat;
  report.critical = 1.63 / std::sqrt(n);
  report.pass = stat < report.critical;
  return report;
}

CapHitReport cap_hit_check(const VectorSet& set, std::uint64_t trials, std::uint64_t seed, int threads) {
  const int d = set.dimension;
  const OrthoGraph g = build_graph(set);
  const std::vector<Context> contexts = enumerate_contexts(g);
  if (contexts.empty() || static_cast<int>(contexts.front().size()) != d) {
    throw std::invalid_argument("cap_hit_check requires a complete basis among the rays");
  }
  const auto rays = normalized_rays(set);
  const double bound = 1.0 / d;
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(threads < 1 ? 1 : threads, 1, std::max<std::uint64_t>(trials, 1)));
  std::vector<double> minima(static_cast<std::size_t>(workers), 1.0);
  std::vector<std::vector<std::uint64_t>> histograms(static_cast<std::size_t>(workers),
                                                     std::vector<std::uint64_t>(static_cast<std::size_t>(d + 1), 0));
  for_trials(static_cast<std::uint64_t>(workers), workers, [&](std::uint64_t w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    std::vector<double> ov(rays.size());
    for (std::uint64_t k = lo; k < hi; ++k) {
      Rng rng(substream_seed(seed, k));
      const ComplexVector psi = sample_haar_vector(d, rng);
      for (std::size_t v = 0; v < rays.size(); ++v) ov[v] = overlap(psi, rays[v]);
      for (const auto& c : contexts) {
        double m = 0.0;
        int captured = 0;
        for (int v : c) {
          m = std::max(m, ov[v]);
          if (ov[v] >= bound - kFloatTolerance) ++captured;
        }
        minima[w] = std::min(minima[w], m);
        ++histograms[w][captured];
      }
    }
  });
  CapHitReport report;
  report.trials = trials;
  report.seed = seed;
  report.d = d;
  report.contexts = static_cast<int>(contexts.size());
  report.capture_histogram.assign(static_cast<std::size_t>(d + 1), 0);
  for (int w = 0; w < workers; ++w) {
    report.minimum = std::min(report.minimum, minima[w]);
    for (int k = 0; k <= d; ++k) report.capture_histogram[k] += histograms[w][k];
  }
  report.pass = report.minimum >= bound - kFloatTolerance;
  return report;
}

CapIndependenceReport cap_independence_check(int d, std::uint64_t trials, std::uint64_t seed, int threads) {
  if (d < 2) throw std::invalid_argument("cap_independence_check requires d >= 2");
  std::vector<double> sums(trials);
  std::vector<char> violated(trials, 0);
  for_trials(trials, threads, [&](std::uint64_t k) {
    Rng rng(substream_seed(seed, k));
    const ComplexMatrix u = haar_unitary(d, rng);
    ComplexVector phi1(static_cast<std::size_t>(d));
    ComplexVector phi2(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      phi1[i] = u(i, 0);
      phi2[i] = u(i, 1);
    }
    const ComplexVector psi = sample_haar_vector(d, rng);
    const double a = overlap(psi, phi1);
    const double b = overlap(psi, phi2);
    sums[k] = a + b;
    violated[k] = a > 0.5 && b > 0.5 ? 1 : 0;
  });
  CapIndependenceReport report;
  report.d = d;
  report.trials = trials;
  report.seed = seed;
  for (std::uint64_t k = 0; k < trials; ++k) {
    report.violations += static_cast<std::uint64_t>(violated[k]);
    report.max_pair_sum = std::max(report.max_pair_sum, sums[k]);
  }
  report.pass = report.violations == 0;
  return report;
}

AnnulusReport annulus_capture_experiment(const VectorSet& set, double t1, double t2, std::uint64_t trials,
                                         std::uint64_t seed, int threads) {
  if (!(t1 <= t2)) throw std::invalid_argument("annulus requires t1 <= t2");
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  const int d = set.dimension;
  const auto rays = normalized_rays(set);
  std::vector<int> counts(trials);
  for_trials(trials, threads, [&](std::uint64_t k) {
    Rng rng(substream_seed(seed, k));
    const auto ov = first_row_overlaps(haar_unitary(d, rng), rays);
    int c = 0;
    for (double x : ov) c += (x >= t1 && x <= t2) ? 1 : 0;
    counts[k] = c;
  });

  AnnulusReport report;
  report.trials = trials;
  report.seed = seed;
  report.t1 = t1;
  report.t2 = t2;
  report.rays = static_cast<int>(rays.size());
  const double n = static_cast<double>(rays.size());
  double sum = 0.0;
  double sum2 = 0.0;
  std::uint64_t argmin = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const double f = counts[k] / n;
    sum += f;
    sum2 += f * f;
    if (counts[k] < counts[argmin]) argmin = k;
  }
  report.mean = sum / static_cast<double>(trials);
  const double var = trials > 1 ? std::max(0.0, (sum2 - sum * report.mean) / static_cast<double>(trials - 1)) : 0.0;
  report.standard_error = std::sqrt(var / static_cast<double>(trials));
  report.minimum_count = counts[argmin];
  report.minimum = counts[argmin] / n;
  Rng witness_rng(substream_seed(seed, argmin));
  report.witness = haar_unitary(d, witness_rng);
  report.minimum_le_mean = report.minimum <= report.mean;
  const double lo = std::clamp(t1, 0.0, 1.0);
  const double hi = std::clamp(t2, 0.0, 1.0);
  report.expected = d >= 2 ? reg_inc_beta(hi, 1.0, d - 1.0) - reg_inc_beta(lo, 1.0, d - 1.0) : 0.0;
  return report;
}

Labeling cap_labeling(const VectorSet& set, const ComplexVector& center, double t1, double t2) {
  if (static_cast<int>(center.size()) != set.dimension) throw std::invalid_argument("cap_labeling: dimension mismatch");
  const auto rays = normalized_rays(set);
  double norm2 = 0.0;
  for (const auto& z : center) norm2 += std::norm(z);
  if (norm2 == 0.0) throw std::invalid_argument("cap_labeling: zero center");
  Labeling out;
  out.reserve(rays.size());
  for (const auto& ray : rays) {
    const double x = overlap(center, ray) / norm2;
    if (x > t2 + kFloatTolerance) {
      out.push_back(Label::kOne);
    } else if (x >= t1 - kFloatTolerance) {
      out.push_back(Label::kContextual);
    } else {
      out.push_back(Label::kZero);
    }
  }
  return out;
}

std::string to_json(const KsReport& r) {
  json doc = {{"experiment", "beta"},
              {"config", config_json(r.config)},
              {"statistic", r.statistic},
              {"critical", r.critical},
              {"pass", r.pass}};
  return doc.dump();
}

std::string to_json(const CapHitReport& r) {
  json doc = {{"experiment", "caphit"}, {"config", {{"d", r.d}, {"trials", r.trials}, {"seed", r.seed}}},
              {"contexts", r.contexts},  {"minimum", r.minimum},
              {"bound", 1.0 / r.d},      {"capture_histogram", r.capture_histogram},
              {"pass", r.pass}};
  return doc.dump();
}

std::string to_json(const CapIndependenceReport& r) {
  json doc = {{"experiment", "capind"},
              {"config", {{"d", r.d}, {"trials", r.trials}, {"seed", r.seed}}},
              {"violations", r.violations},
              {"max_pair_sum", r.max_pair_sum},
              {"pass", r.pass}};
  return doc.dump();
}

std::string to_json(const AnnulusReport& r) {
  json doc = {{"experiment", "annulus"},
              {"config", {{"trials", r.trials}, {"seed", r.seed}, {"t1", r.t1}, {"t2", r.t2}}},
              {"rays", r.rays},
              {"mean", r.mean},
              {"standard_error", r.standard_error},
              {"expected", r.expected},
              {"minimum", r.minimum},
              {"minimum_count", r.minimum_count},
              {"witness", matrix_json(r.witness)},
              {"pass", r.minimum_le_mean}};
  return doc.dump();
}

}  // namespace kscontext
