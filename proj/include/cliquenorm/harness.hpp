#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquenorm {

struct Violation {
  std::string instance;
  double p = 0.0;
  double count = 0.0;  // k_t of the instance
  double bound = 0.0;
  double norm = 0.0;
};

struct PerPStat {
  double p = 0.0;
  double max_ratio = 0.0;
  std::string witness;
};

// Aggregate of a verification sweep.  A correct implementation yields an
// empty violation list and max_ratio <= 1 + 1e-9.
struct VerificationReport {
  std::string suite;
  std::uint64_t instances_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxStoredViolations of them
  double max_ratio = 0.0;             // over instances with bound > 0
  std::string witness;                // instance attaining max_ratio
  std::vector<PerPStat> per_p;
  std::uint64_t precondition_met = 0;  // fixed-n suite only
  double elapsed_seconds = 0.0;

  bool passed() const { return violation_count == 0; }
};

inline constexpr std::size_t kMaxStoredViolations = 100;

// Checks k_t <= clique_bound(p, t, ||d||_p) + 1e-9 for every labeled graph
// on n vertices and every p in p_list, with C set to each instance's exact
// norm.  n <= 7 unless allow_n8; work is chunked over edge-bitmask ranges
// and merged deterministically.
VerificationReport verify_exhaustive_graphs(int n, int t,
                                            const std::vector<double>& p_list,
                                            bool allow_n8 = false);

// Same check over seeded G(n, edge_prob) samples; per-sample substreams are
// derived from the master seed, so reports do not depend on chunking.
VerificationReport verify_random_graphs(int n, std::uint64_t samples,
                                        double edge_prob, int t,
                                        const std::vector<double>& p_list,
                                        std::uint64_t seed);

// Checks k^r_t <= hyperclique_bound(p, t, r, j, ||d||_{j,p}) + 1e-9 for
// every labeled r-uniform hypergraph on n vertices.  Requires C(n,r) <= 20.
VerificationReport verify_exhaustive_hypergraphs(
    int n, int r, int j, int t, const std::vector<double>& p_list);

// Samples G(n, 1/2) graphs; for each one meeting the fixed-n hypothesis
// n (s_real-1)^p <= C^p (C = exact norm), checks k_t against
// (n/u) binom(u,t) with u = C n^(-1/p) + 1.  Requires p > t-1.
VerificationReport verify_fixed_n(int n, int t, double p,
                                  std::uint64_t samples, std::uint64_t seed);

// Extremal constructions that meet their bounds with equality.
struct TightnessSpec {
  enum class Kind { single_clique, disjoint_cliques, fixed_n };
  Kind kind = Kind::single_clique;
  int u = 3;  // clique order
  int m = 1;  // number of disjoint copies (disjoint_cliques / fixed_n)
};

struct TightnessResult {
  double count = 0.0;
  double norm = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

// Throws std::invalid_argument with a diagnostic when the spec violates the
// integrality conditions under which the construction is extremal
// (single_clique needs p <= t-1; disjoint_cliques needs p > t-1 and
// u = s_N; fixed_n needs p > t-1 and integral n/u).
TightnessResult verify_tightness(const TightnessSpec& spec, int t, double p);

// Numerical check of the unimodality analysis behind the supercritical
// bound: |g(s_real)| small, h increasing on a geometric grid left of s_real
// and decreasing right of it (up to 10^3), g strictly decreasing, and the
// central difference of h at s_real negligible.
struct Prop9Report {
  double s_real = 0.0;
  double root_residual = 0.0;
  double peak_derivative = 0.0;  // central difference of h at s_real
  bool unimodal_ok = false;
  bool monotone_ok = false;

  bool passed() const {
    return root_residual <= 1e-9 && unimodal_ok && monotone_ok;
  }
};

Prop9Report check_proposition9(double p, int t, int grid_size);

}  // namespace cliquenorm
