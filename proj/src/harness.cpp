#include "cliquenorm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "cliquenorm/bounds.hpp"
#include "cliquenorm/combinatorics.hpp"
#include "cliquenorm/graph.hpp"
#include "cliquenorm/hypergraph.hpp"
#include "cliquenorm/realmath.hpp"

namespace cliquenorm {
namespace {

constexpr double kSlack = 1e-9;  // absolute slack on every bound check

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

int thread_count(std::uint64_t chunks) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("CLIQUENORM_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) n = parsed;
  }
  return static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(n), chunks));
}

// Runs work(0..chunks-1) across a small thread pool and returns the results
// indexed by chunk, so any later merge is independent of scheduling.
template <typename Chunk, typename Work>
std::vector<Chunk> run_chunked(std::uint64_t chunks, Work&& work) {
  std::vector<Chunk> results(chunks);
  const int threads = thread_count(chunks);
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) results[c] = work(c);
    return results;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto runner = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        results[c] = work(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(runner);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

void validate_p_list(const std::vector<double>& p_list) {
  if (p_list.empty()) throw std::invalid_argument("empty p list");
  for (double p : p_list) {
    if (std::isnan(p) || std::isinf(p) || !(p > 0))
      throw std::invalid_argument("p values must be finite and positive");
  }
}

struct SuiteChunk {
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::vector<double> max_ratio;       // per p
  std::vector<std::uint64_t> witness;  // per p, instance mask
};

// Merge chunk results in chunk order: counts add, ratios take the first
// strictly larger value, so ties resolve to the lowest instance mask.
VerificationReport merge_chunks(
    std::string suite, const std::vector<double>& p_list,
    const std::vector<SuiteChunk>& chunks,
    const std::function<std::string(std::uint64_t)>& instance_name) {
  VerificationReport report;
  report.suite = std::move(suite);
  report.per_p.resize(p_list.size());
  std::vector<std::uint64_t> witness(p_list.size(), 0);
  std::vector<bool> has_witness(p_list.size(), false);
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    report.per_p[i].p = p_list[i];
    report.per_p[i].max_ratio = 0.0;
  }
  for (const auto& chunk : chunks) {
    report.instances_checked += chunk.checked;
    report.violation_count += chunk.violation_count;
    for (const auto& v : chunk.violations) {
      if (report.violations.size() < kMaxStoredViolations)
        report.violations.push_back(v);
    }
    for (std::size_t i = 0; i < p_list.size(); ++i) {
      if (chunk.max_ratio[i] > report.per_p[i].max_ratio) {
        report.per_p[i].max_ratio = chunk.max_ratio[i];
        witness[i] = chunk.witness[i];
        has_witness[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    if (has_witness[i]) report.per_p[i].witness = instance_name(witness[i]);
    if (report.per_p[i].max_ratio > report.max_ratio) {
      report.max_ratio = report.per_p[i].max_ratio;
      report.witness = report.per_p[i].witness;
    }
  }
  return report;
}

// Bound as a function of the degree power sum, memoized per chunk; the
// solver only runs once per distinct norm value.
class BoundCache {
 public:
  BoundCache(double p, int t) : p_(p), t_(t) {}

  double bound_for_sum(double sum) {
    if (sum == 0.0) return 0.0;
    std::uint64_t key;
    static_assert(sizeof(key) == sizeof(sum));
    std::memcpy(&key, &sum, sizeof(key));
    auto [it, inserted] = cache_.try_emplace(key, 0.0);
    if (inserted)
      it->second = clique_bound(p_, t_, std::pow(sum, 1.0 / p_)).bound;
    return it->second;
  }

 private:
  double p_;
  int t_;
  std::unordered_map<std::uint64_t, double> cache_;
};

class HyperBoundCache {
 public:
  HyperBoundCache(double p, int t, int r, int j) : p_(p), t_(t), r_(r), j_(j) {}

  double bound_for_sum(double sum) {
    if (sum == 0.0) return 0.0;
    std::uint64_t key;
    std::memcpy(&key, &sum, sizeof(key));
    auto [it, inserted] = cache_.try_emplace(key, 0.0);
    if (inserted)
      it->second =
          hyperclique_bound(p_, t_, r_, j_, std::pow(sum, 1.0 / p_)).bound;
    return it->second;
  }

 private:
  double p_;
  int t_, r_, j_;
  std::unordered_map<std::uint64_t, double> cache_;
};

}  // namespace

VerificationReport verify_exhaustive_graphs(int n, int t,
                                            const std::vector<double>& p_list,
                                            bool allow_n8) {
  const int n_cap = allow_n8 ? 8 : 7;
  if (n < 1 || n > n_cap)
    throw std::invalid_argument(
        "verify_exhaustive_graphs: n exceeds the cost guard (" +
        std::to_string(n_cap) + ")");
  if (t < 3)
    throw std::invalid_argument("verify_exhaustive_graphs: t must be >= 3");
  validate_p_list(p_list);

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = std::uint64_t(1)
                              << (static_cast<unsigned>(n) * (n - 1) / 2);
  const std::uint64_t chunk_size = std::min<std::uint64_t>(total, 1 << 14);
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;

  // deg^p lookup per p: degrees on n vertices stay below n
  std::vector<std::vector<double>> pow_table(p_list.size(),
                                             std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < p_list.size(); ++i)
    for (int d = 0; d < n; ++d)
      pow_table[i][static_cast<std::size_t>(d)] =
          std::pow(static_cast<double>(d), p_list[i]);

  auto work = [&](std::uint64_t c) {
    SuiteChunk chunk;
    chunk.max_ratio.assign(p_list.size(), 0.0);
    chunk.witness.assign(p_list.size(), 0);
    std::vector<BoundCache> caches;
    caches.reserve(p_list.size());
    for (double p : p_list) caches.emplace_back(p, t);

    const std::uint64_t lo = c * chunk_size;
    const std::uint64_t hi = std::min(total, lo + chunk_size);
    for_each_graph_in_range(n, lo, hi, [&](const Graph& g, std::uint64_t mask) {
      const double k_t = static_cast<double>(count_cliques(g, t));
      for (std::size_t i = 0; i < p_list.size(); ++i) {
        double sum = 0.0;
        for (int d : g.degrees())
          sum += pow_table[i][static_cast<std::size_t>(d)];
        const double bound = caches[i].bound_for_sum(sum);
        if (k_t > bound + kSlack) {
          ++chunk.violation_count;
          if (chunk.violations.size() < kMaxStoredViolations) {
            std::ostringstream id;
            id << "n=" << n << ";mask=" << mask;
            chunk.violations.push_back(
                {id.str(), p_list[i], k_t, bound,
                 sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / p_list[i])});
          }
        }
        if (bound > 0.0) {
          const double ratio = k_t / bound;
          if (ratio > chunk.max_ratio[i]) {
            chunk.max_ratio[i] = ratio;
            chunk.witness[i] = mask;
          }
        }
      }
      ++chunk.checked;
    });
    return chunk;
  };

  auto results = run_chunked<SuiteChunk>(chunks, work);
  VerificationReport report =
      merge_chunks("graphs-exhaustive", p_list, results, [n](std::uint64_t m) {
        return "n=" + std::to_string(n) + ";mask=" + std::to_string(m);
      });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_random_graphs(int n, std::uint64_t samples,
                                        double edge_prob, int t,
                                        const std::vector<double>& p_list,
                                        std::uint64_t seed) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("verify_random_graphs: n must be at most 64");
  if (t < 3)
    throw std::invalid_argument("verify_random_graphs: t must be >= 3");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument(
        "verify_random_graphs: edge_prob must be in [0,1]");
  validate_p_list(p_list);

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t chunk_size = 512;
  const std::uint64_t chunks =
      samples == 0 ? 0 : (samples + chunk_size - 1) / chunk_size;

  auto work = [&](std::uint64_t c) {
    SuiteChunk chunk;
    chunk.max_ratio.assign(p_list.size(), 0.0);
    chunk.witness.assign(p_list.size(), 0);
    std::vector<BoundCache> caches;
    caches.reserve(p_list.size());
    for (double p : p_list) caches.emplace_back(p, t);

    const std::uint64_t lo = c * chunk_size;
    const std::uint64_t hi = std::min(samples, lo + chunk_size);
    for (std::uint64_t s = lo; s < hi; ++s) {
      const Graph g = random_graph(n, edge_prob, splitmix64(seed ^ s));
      const double k_t = static_cast<double>(count_cliques(g, t));
      for (std::size_t i = 0; i < p_list.size(); ++i) {
        double sum = 0.0;
        for (int d : g.degrees())
          sum += std::pow(static_cast<double>(d), p_list[i]);
        const double bound = caches[i].bound_for_sum(sum);
        if (k_t > bound + kSlack) {
          ++chunk.violation_count;
          if (chunk.violations.size() < kMaxStoredViolations)
            chunk.violations.push_back(
                {"sample=" + std::to_string(s), p_list[i], k_t, bound,
                 sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / p_list[i])});
        }
        if (bound > 0.0) {
          const double ratio = k_t / bound;
          if (ratio > chunk.max_ratio[i]) {
            chunk.max_ratio[i] = ratio;
            chunk.witness[i] = s;
          }
        }
      }
      ++chunk.checked;
    }
    return chunk;
  };

  auto results = run_chunked<SuiteChunk>(chunks, work);
  VerificationReport report =
      merge_chunks("graphs-random", p_list, results, [](std::uint64_t s) {
        return "sample=" + std::to_string(s);
      });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_exhaustive_hypergraphs(
    int n, int r, int j, int t, const std::vector<double>& p_list) {
  if (r < 2 || j < 1 || j >= r || t <= r)
    throw std::invalid_argument(
        "verify_exhaustive_hypergraphs: need t > r > j >= 1");
  if (binomial_u64(static_cast<std::uint64_t>(n),
                   static_cast<std::uint64_t>(r)) > 20)
    throw std::invalid_argument(
        "verify_exhaustive_hypergraphs: C(n,r) exceeds the 20-bit cost guard");
  validate_p_list(p_list);

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total =
      std::uint64_t(1) << binomial_u64(static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(r));
  const std::uint64_t chunk_size = std::min<std::uint64_t>(total, 1 << 13);
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;

  auto work = [&](std::uint64_t c) {
    SuiteChunk chunk;
    chunk.max_ratio.assign(p_list.size(), 0.0);
    chunk.witness.assign(p_list.size(), 0);
    std::vector<HyperBoundCache> caches;
    caches.reserve(p_list.size());
    for (double p : p_list) caches.emplace_back(p, t, r, j);

    const std::uint64_t lo = c * chunk_size;
    const std::uint64_t hi = std::min(total, lo + chunk_size);
    for_each_hypergraph_in_range(
        n, r, lo, hi, [&](const Hypergraph& h, std::uint64_t mask) {
          const double k_rt = static_cast<double>(count_hypercliques(h, t));
          for (std::size_t i = 0; i < p_list.size(); ++i) {
            const double sum = subset_degree_power_sum(h, j, p_list[i]);
            const double bound = caches[i].bound_for_sum(sum);
            if (k_rt > bound + kSlack) {
              ++chunk.violation_count;
              if (chunk.violations.size() < kMaxStoredViolations) {
                std::ostringstream id;
                id << "n=" << n << ";r=" << r << ";mask=" << mask;
                chunk.violations.push_back(
                    {id.str(), p_list[i], k_rt, bound,
                     sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / p_list[i])});
              }
            }
            if (bound > 0.0) {
              const double ratio = k_rt / bound;
              if (ratio > chunk.max_ratio[i]) {
                chunk.max_ratio[i] = ratio;
                chunk.witness[i] = mask;
              }
            }
          }
          ++chunk.checked;
        });
    return chunk;
  };

  auto results = run_chunked<SuiteChunk>(chunks, work);
  VerificationReport report = merge_chunks(
      "hyper-exhaustive", p_list, results, [n, r](std::uint64_t m) {
        return "n=" + std::to_string(n) + ";r=" + std::to_string(r) +
               ";mask=" + std::to_string(m);
      });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_fixed_n(int n, int t, double p,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("verify_fixed_n: n must be at most 64");
  if (t < 3) throw std::invalid_argument("verify_fixed_n: t must be >= 3");
  RegimeParams params{t, p};
  validate(params);
  if (!(p > t - 1))
    throw std::invalid_argument("verify_fixed_n: requires p > t-1");

  const auto start = std::chrono::steady_clock::now();
  const double s_real = solve_s_real(params);
  const double pre_lhs = n * std::pow(s_real - 1.0, p);

  struct FixedNChunk {
    std::uint64_t checked = 0;
    std::uint64_t met = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;
    double max_ratio = 0.0;
    std::uint64_t witness = 0;
  };

  const std::uint64_t chunk_size = 512;
  const std::uint64_t chunks =
      samples == 0 ? 0 : (samples + chunk_size - 1) / chunk_size;

  auto work = [&](std::uint64_t c) {
    FixedNChunk chunk;
    const std::uint64_t lo = c * chunk_size;
    const std::uint64_t hi = std::min(samples, lo + chunk_size);
    for (std::uint64_t s = lo; s < hi; ++s) {
      const Graph g = random_graph(n, 0.5, splitmix64(seed ^ s));
      double sum = 0.0;
      for (int d : g.degrees()) sum += std::pow(static_cast<double>(d), p);
      ++chunk.checked;
      if (pre_lhs > sum) continue;  // hypothesis not met: count, don't check
      ++chunk.met;
      const double u = std::pow(sum / n, 1.0 / p) + 1.0;
      const double bound = n / u * binom_real(u, t);
      const double k_t = static_cast<double>(count_cliques(g, t));
      if (k_t > bound + kSlack) {
        ++chunk.violation_count;
        if (chunk.violations.size() < kMaxStoredViolations)
          chunk.violations.push_back({"sample=" + std::to_string(s), p, k_t,
                                      bound, std::pow(sum, 1.0 / p)});
      }
      if (bound > 0.0) {
        const double ratio = k_t / bound;
        if (ratio > chunk.max_ratio) {
          chunk.max_ratio = ratio;
          chunk.witness = s;
        }
      }
    }
    return chunk;
  };

  auto results = run_chunked<FixedNChunk>(chunks, work);
  VerificationReport report;
  report.suite = "fixed-n";
  report.per_p.push_back({p, 0.0, ""});
  bool has_witness = false;
  for (const auto& chunk : results) {
    report.instances_checked += chunk.checked;
    report.precondition_met += chunk.met;
    report.violation_count += chunk.violation_count;
    for (const auto& v : chunk.violations) {
      if (report.violations.size() < kMaxStoredViolations)
        report.violations.push_back(v);
    }
    if (chunk.max_ratio > report.max_ratio) {
      report.max_ratio = chunk.max_ratio;
      report.witness = "sample=" + std::to_string(chunk.witness);
      has_witness = true;
    }
  }
  if (has_witness) {
    report.per_p[0].max_ratio = report.max_ratio;
    report.per_p[0].witness = report.witness;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

TightnessResult verify_tightness(const TightnessSpec& spec, int t, double p) {
  if (t < 3) throw std::invalid_argument("verify_tightness: t must be >= 3");
  if (spec.u < t)
    throw std::invalid_argument("verify_tightness: clique order below t");
  if (spec.m < 1)
    throw std::invalid_argument("verify_tightness: copy count must be >= 1");
  RegimeParams params{t, p};
  validate(params);

  Graph g(0);
  TightnessResult result;
  switch (spec.kind) {
    case TightnessSpec::Kind::single_clique: {
      if (p > t - 1)
        throw std::invalid_argument(
            "verify_tightness: a single clique is extremal only for p <= t-1");
      g = construct_disjoint_cliques({spec.u});
      result.norm = degree_norm(g, p);
      result.bound = clique_bound(p, t, result.norm).bound;
      break;
    }
    case TightnessSpec::Kind::disjoint_cliques: {
      if (!(p > t - 1))
        throw std::invalid_argument(
            "verify_tightness: disjoint cliques are extremal only for p > t-1");
      const long long s_int = select_s_int(params);
      if (s_int != spec.u) {
        std::ostringstream msg;
        msg << "verify_tightness: u=" << spec.u
            << " does not maximize h at p=" << p << " (s_N=" << s_int
            << "); the construction is not extremal there";
        throw std::invalid_argument(msg.str());
      }
      g = construct_disjoint_cliques(
          std::vector<int>(static_cast<std::size_t>(spec.m), spec.u));
      result.norm = degree_norm(g, p);
      result.bound = clique_bound(p, t, result.norm).bound;
      break;
    }
    case TightnessSpec::Kind::fixed_n: {
      if (!(p > t - 1))
        throw std::invalid_argument(
            "verify_tightness: the fixed-n bound requires p > t-1");
      g = construct_disjoint_cliques(
          std::vector<int>(static_cast<std::size_t>(spec.m), spec.u));
      result.norm = degree_norm(g, p);
      result.bound = fixed_n_bound(g.vertex_count(), p, t, result.norm);
      break;
    }
  }
  result.count = static_cast<double>(count_cliques(g, t));
  result.ratio = result.bound > 0 ? result.count / result.bound : 0.0;
  return result;
}

Prop9Report check_proposition9(double p, int t, int grid_size) {
  RegimeParams params{t, p};
  validate(params);
  if (!(p > t - 1))
    throw std::invalid_argument("check_proposition9: requires p > t-1");
  if (grid_size < 2)
    throw std::invalid_argument("check_proposition9: grid too small");

  Prop9Report report;
  report.s_real = solve_s_real(params);
  report.root_residual = std::abs(g_value(report.s_real, params));

  const double s = report.s_real;
  const double span = s - (t - 1);

  // geometric grid approaching s from the left, then moving right up to 1e3
  // (or past s when s itself is large)
  std::vector<double> left, right;
  for (int i = grid_size; i >= 1; --i) {
    const double x = t - 1 + span * std::pow(0.5, i);
    // tiny offsets round onto t-1 itself or onto the previous grid point
    if (x > t - 1 && (left.empty() || x > left.back())) left.push_back(x);
  }
  const double cap = std::max(1e3, s + 2 * span);
  for (double x = s + span * 0.5; x < cap; x = s + (x - s) * 2.0)
    right.push_back(x);
  right.push_back(cap);

  report.unimodal_ok = true;
  double prev = h_value(left.front(), params);
  for (std::size_t i = 1; i < left.size(); ++i) {
    const double cur = h_value(left[i], params);
    if (!(cur > prev)) report.unimodal_ok = false;
    prev = cur;
  }
  const double peak = h_value(s, params);
  if (!(peak > prev)) report.unimodal_ok = false;
  prev = peak;
  for (double x : right) {
    const double cur = h_value(x, params);
    if (!(cur < prev)) report.unimodal_ok = false;
    prev = cur;
  }

  const double delta = 1e-5 * std::max(1.0, s);
  report.peak_derivative =
      (h_value(s + delta, params) - h_value(s - delta, params)) / (2 * delta);
  if (std::abs(report.peak_derivative) > 1e-6 * peak)
    report.unimodal_ok = false;

  report.monotone_ok = true;
  double prev_g = g_value(left.front(), params);
  for (std::size_t i = 1; i < left.size(); ++i) {
    const double cur = g_value(left[i], params);
    if (!(cur < prev_g)) report.monotone_ok = false;
    prev_g = cur;
  }
  for (double x : right) {
    const double cur = g_value(x, params);
    if (!(cur < prev_g)) report.monotone_ok = false;
    prev_g = cur;
  }
  return report;
}

}  // namespace cliquenorm
