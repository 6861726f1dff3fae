#include "cliquenorm/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "cliquenorm/combinatorics.hpp"
#include "cliquenorm/graph.hpp"
#include "cliquenorm/hypergraph.hpp"
#include "cliquenorm/realmath.hpp"

namespace cliquenorm {
namespace {

// Entropies are exact functions of the integer extension counts
// N(S) = #{A in family : S subset of A}: every ordered k-prefix realizing S
// has probability N(S) (d-k)! / (d! |F|), and S accounts for k! of them.
std::vector<double> prefix_entropies(const SetFamily& family) {
  const int d = family.member_size;
  const double members = static_cast<double>(family.members.size());
  std::vector<double> h(static_cast<std::size_t>(d));
  std::vector<int> buffer;
  std::vector<double> terms;
  for (int k = 1; k <= d; ++k) {
    std::map<std::vector<int>, std::uint64_t> counts;
    buffer.assign(static_cast<std::size_t>(k), 0);
    for (const auto& member : family.members) {
      for_each_combination(d, k, [&](std::span<const int> idx) {
        for (int i = 0; i < k; ++i)
          buffer[static_cast<std::size_t>(i)] =
              member[static_cast<std::size_t>(idx[i])];
        ++counts[buffer];
      });
    }
    // H_k = (k!/den) * sum_S N(S) (log2 den - log2 N(S)), den = |F| d!/(d-k)!
    const double den =
        members * static_cast<double>(factorial_u64(d) / factorial_u64(d - k));
    const double log2_den = std::log2(den);
    terms.clear();
    terms.reserve(counts.size());
    for (const auto& [subset, count] : counts) {
      const double c = static_cast<double>(count);
      terms.push_back(c * (log2_den - std::log2(c)));
    }
    const double factor = static_cast<double>(factorial_u64(k)) / den;
    h[static_cast<std::size_t>(k - 1)] = factor * pairwise_sum(terms);
  }
  return h;
}

double log2_degree_power_sum(const Graph& g, double p) {
  double sum = 0.0;
  for (int d : g.degrees()) sum += std::pow(static_cast<double>(d), p);
  return std::log2(sum);
}

void require_positive_finite_p(double p, const char* fn) {
  if (std::isnan(p) || std::isinf(p) || !(p > 0))
    throw std::invalid_argument(std::string(fn) +
                                ": p must be finite and positive");
}

EntropyChainReport chain_for_cliques(const Graph& g, int t, const char* fn) {
  SetFamily family = family_from_cliques(g, t);
  if (family.members.empty())
    throw std::invalid_argument(std::string(fn) + ": graph has no " +
                                std::to_string(t) + "-clique");
  return entropy_chain(family);
}

}  // namespace

void validate(const SetFamily& family) {
  if (family.members.empty())
    throw std::invalid_argument("SetFamily: empty family");
  if (family.member_size < 1 || family.member_size > family.ground_size)
    throw std::invalid_argument("SetFamily: bad member size");
  for (const auto& member : family.members) {
    if (static_cast<int>(member.size()) != family.member_size)
      throw std::invalid_argument("SetFamily: member of wrong size");
    for (std::size_t i = 0; i < member.size(); ++i) {
      if (member[i] < 0 || member[i] >= family.ground_size)
        throw std::invalid_argument("SetFamily: element out of range");
      if (i > 0 && member[i] <= member[i - 1])
        throw std::invalid_argument("SetFamily: members must be sorted sets");
    }
  }
  std::vector<std::vector<int>> copy = family.members;
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
    throw std::invalid_argument("SetFamily: duplicate member");
}

SetFamily family_from_cliques(const Graph& g, int t) {
  SetFamily family;
  family.ground_size = g.vertex_count();
  family.member_size = t;
  family.members = list_cliques(g, t);
  return family;
}

SetFamily family_from_hypercliques(const Hypergraph& h, int t) {
  SetFamily family;
  family.ground_size = h.vertex_count();
  family.member_size = t;
  family.members = list_hypercliques(h, t);
  return family;
}

EntropyChainReport entropy_chain(const SetFamily& family) {
  validate(family);
  EntropyChainReport report;
  report.prefix_entropy = prefix_entropies(family);
  const int d = family.member_size;
  report.x.resize(static_cast<std::size_t>(d));
  double prev = 0.0;
  double product = 1.0;
  for (int k = 0; k < d; ++k) {
    const double hk = report.prefix_entropy[static_cast<std::size_t>(k)];
    report.x[static_cast<std::size_t>(k)] = std::exp2(hk - prev);
    product *= report.x[static_cast<std::size_t>(k)];
    prev = hk;
  }
  report.product = product;
  report.chain_ok = lemma8_check(report, kChainTolerance).ok;
  return report;
}

Lemma8Check lemma8_check(const EntropyChainReport& report, double tol) {
  Lemma8Check check;
  check.ok = true;
  for (std::size_t k = 0; k + 1 < report.x.size(); ++k) {
    const double margin = report.x[k] - report.x[k + 1] - 1.0;
    check.margins.push_back(margin);
    if (margin < -tol) check.ok = false;
  }
  return check;
}

ClaimSmallPRecord claim_small_p(const Graph& g, int t, double p, double u) {
  if (t < 3) throw std::invalid_argument("claim_small_p: t must be >= 3");
  require_positive_finite_p(p, "claim_small_p");
  if (!(p <= t - 1))
    throw std::invalid_argument("claim_small_p: requires p <= t-1");
  if (!(u > 1))
    throw std::invalid_argument("claim_small_p: u must exceed 1");

  const EntropyChainReport chain = chain_for_cliques(g, t, "claim_small_p");
  ClaimSmallPRecord rec;
  rec.x1 = chain.x[0];
  rec.x2 = chain.x[1];
  rec.lhs = rec.x1 * std::pow(rec.x2, p);
  rec.rhs = u * std::pow(u - 1.0, p);
  const double k_t = static_cast<double>(count_cliques(g, t));
  rec.hypothesis = k_t > binom_real(u, t);
  rec.holds = !rec.hypothesis || rec.lhs > rec.rhs;
  return rec;
}

Claim6Record claim6_gap(const Graph& g, int t, double p) {
  if (t < 2) throw std::invalid_argument("claim6_gap: t must be >= 2");
  require_positive_finite_p(p, "claim6_gap");
  const EntropyChainReport chain = chain_for_cliques(g, t, "claim6_gap");
  Claim6Record rec;
  const double h1 = chain.prefix_entropy[0];
  const double h2 = chain.prefix_entropy[1];
  rec.lhs = h1 + p * (h2 - h1);
  rec.rhs = log2_degree_power_sum(g, p);
  rec.gap = rec.rhs - rec.lhs;
  return rec;
}

Claim7Record claim7(const Graph& g, int t, double p, double u) {
  if (t < 3) throw std::invalid_argument("claim7: t must be >= 3");
  require_positive_finite_p(p, "claim7");
  if (!(p > t - 1)) throw std::invalid_argument("claim7: requires p > t-1");
  if (!(u > 1)) throw std::invalid_argument("claim7: u must exceed 1");

  const EntropyChainReport chain = chain_for_cliques(g, t, "claim7");
  Claim7Record rec;
  rec.x1 = chain.x[0];
  rec.x2 = chain.x[1];
  rec.n = g.vertex_count();
  rec.lhs = rec.x1 * std::pow(rec.x2, p);
  rec.rhs = rec.n * std::pow(u - 1.0, p);
  rec.chain_n_ok = rec.x1 <= rec.n + kChainTolerance;

  const double k_t = static_cast<double>(count_cliques(g, t));
  const double s_real = solve_s_real(RegimeParams{t, p});
  rec.hypothesis =
      k_t > rec.n / u * binom_real(u, t) && s_real <= u;
  rec.holds = !rec.hypothesis || rec.lhs > rec.rhs;
  return rec;
}

HyperEntropyRecord hyper_entropy_diagnostic(const Hypergraph& h, int t, int r,
                                            int j, double p, double u) {
  RegimeParams params{t, p, r, j};
  validate(params);
  if (r != h.uniformity())
    throw std::invalid_argument("hyper_entropy_diagnostic: r mismatch");
  if (params.supercritical())
    throw std::invalid_argument(
        "hyper_entropy_diagnostic: requires p <= (t-j)/(r-j)");
  if (!(u > 1))
    throw std::invalid_argument("hyper_entropy_diagnostic: u must exceed 1");

  SetFamily family = family_from_hypercliques(h, t);
  if (family.members.empty())
    throw std::invalid_argument(
        "hyper_entropy_diagnostic: no t-hyperclique present");
  const EntropyChainReport chain = entropy_chain(family);

  HyperEntropyRecord rec;
  rec.A = rec.B = rec.Cfac = 1.0;
  for (int i = 0; i < t; ++i) {
    const double xi = chain.x[static_cast<std::size_t>(i)];
    if (i < j)
      rec.A *= xi;
    else if (i < r)
      rec.B *= xi;
    else
      rec.Cfac *= xi;
  }

  const double h_j = chain.prefix_entropy[static_cast<std::size_t>(j - 1)];
  const double h_r = chain.prefix_entropy[static_cast<std::size_t>(r - 1)];
  rec.lhs5 = h_j + p * (h_r - h_j);
  rec.rhs5 = std::log2(static_cast<double>(factorial_u64(j))) +
             p * std::log2(static_cast<double>(factorial_u64(r - j))) +
             std::log2(subset_degree_power_sum(h, j, p));

  rec.abp = rec.A * std::pow(rec.B, p);
  rec.abp_target = falling_factorial(u, j) *
                   std::pow(falling_factorial(u - j, r - j), p);
  const double k_rt = static_cast<double>(family.members.size());
  rec.hypothesis = k_rt > binom_real(u, t);
  rec.abp_ok = !rec.hypothesis ||
               rec.abp >= rec.abp_target * (1.0 - 1e-12) - kChainTolerance;
  return rec;
}

}  // namespace cliquenorm
