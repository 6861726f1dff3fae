#pragma once

#include <vector>

namespace cliquenorm {

class Graph;
class Hypergraph;

inline constexpr double kChainTolerance = 1e-9;

// A family of distinct d-subsets of {0,...,ground_size-1}.
struct SetFamily {
  int ground_size = 0;
  int member_size = 0;
  std::vector<std::vector<int>> members;  // sorted vertex vectors
};

void validate(const SetFamily& family);

SetFamily family_from_cliques(const Graph& g, int t);
SetFamily family_from_hypercliques(const Hypergraph& h, int t);

// Exact entropies of the sampling process "uniform member, then uniform
// ordering of its elements": prefix_entropy[k-1] = H(X_1,...,X_k) in bits
// and x[k-1] = 2^(H_k - H_{k-1}).  Entropies are computed from integer
// extension counts, never by sampling.
struct EntropyChainReport {
  std::vector<double> prefix_entropy;
  std::vector<double> x;
  bool chain_ok = false;  // x_k >= x_{k+1} + 1 up to kChainTolerance
  double product = 0.0;   // prod_k x_k = d! * |family|
};

EntropyChainReport entropy_chain(const SetFamily& family);

struct Lemma8Check {
  bool ok = false;
  std::vector<double> margins;  // x_k - x_{k+1} - 1
};

Lemma8Check lemma8_check(const EntropyChainReport& report, double tol);

// Diagnostic for the subcritical entropy estimate: whenever
// k_t(G) > binom(u,t), the chain forces x_1 x_2^p > u (u-1)^p.
// Requires 0 < p <= t-1 and at least one t-clique.
struct ClaimSmallPRecord {
  double x1 = 0.0, x2 = 0.0;
  double lhs = 0.0, rhs = 0.0;
  bool hypothesis = false;  // k_t(G) > binom(u,t)
  bool holds = false;       // hypothesis implies lhs > rhs
};

ClaimSmallPRecord claim_small_p(const Graph& g, int t, double p, double u);

// H(X_1) + p H(X_2 | X_1) <= log2 sum_v deg(v)^p, for any p > 0.
struct Claim6Record {
  double lhs = 0.0, rhs = 0.0, gap = 0.0;  // gap = rhs - lhs >= 0
};

Claim6Record claim6_gap(const Graph& g, int t, double p);

// Fixed-n supercritical diagnostic: whenever k_t(G) > (n/u) binom(u,t) and
// s_real <= u, the chain forces x_1 x_2^p > n (u-1)^p.  Also checks the
// support bound x_1 <= n.  Requires p > t-1.
struct Claim7Record {
  double x1 = 0.0, x2 = 0.0;
  int n = 0;
  double lhs = 0.0, rhs = 0.0;
  bool chain_n_ok = false;
  bool hypothesis = false;
  bool holds = false;
};

Claim7Record claim7(const Graph& g, int t, double p, double u);

// Hypergraph subcritical diagnostic over the t-hyperclique family:
// with A = x_1...x_j, B = x_{j+1}...x_r, Cfac = x_{r+1}...x_t, checks
//   lhs5 = H(X_1..X_j) + p H(X_{j+1}..X_r | X_1..X_j)
//        <= log2( j! (r-j)!^p sum_S deg(S)^p ) = rhs5
// and, whenever k^r_t(H) > binom(u,t),
//   A B^p >= (u)_j ((u-j)...(u-r+1))^p.
// Requires 0 < p <= (t-j)/(r-j).
struct HyperEntropyRecord {
  double A = 0.0, B = 0.0, Cfac = 0.0;
  double lhs5 = 0.0, rhs5 = 0.0;
  double abp = 0.0, abp_target = 0.0;
  bool hypothesis = false;
  bool abp_ok = false;
};

HyperEntropyRecord hyper_entropy_diagnostic(const Hypergraph& h, int t, int r,
                                            int j, double p, double u);

}  // namespace cliquenorm
