#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace cliquenorm {

// Thrown when a bound's stated hypothesis fails (e.g. the fixed-n bound
// requires n (s_real - 1)^p <= C^p); the caller must not fall back to a
// different bound silently.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Regime { subcritical, supercritical };

struct BoundResult {
  Regime regime = Regime::subcritical;
  double u = 0.0;                       // critical parameter actually used
  std::optional<double> s_real;         // s_R or stilde_R, supercritical only
  std::optional<long long> s_int;       // s_N, graph supercritical only
  double bound = 0.0;
};

// Maximum number of t-cliques in a graph with degree-sequence lp-norm at
// most C.  Subcritical (p <= t-1): max{binom(u,t), 0} with
// u^(1/p)(u-1) = C.  Supercritical: C^p h(s_N).  Rejects p = infinity
// (use chase_gls_bound) and t < 3.
BoundResult clique_bound(double p, int t, double C);

// Fixed vertex count variant for p > t-1: (n/u) binom(u,t) with
// u = C n^(-1/p) + 1.  Throws PreconditionError when
// n (s_real-1)^p > C^p.
double fixed_n_bound(int n, double p, int t, double C);

// Maximum number of t-cliques in a graph with e edges: binom(u,t) where
// u(u-1)/2 = e.  Equals clique_bound(1, t, 2e).bound.
double kruskal_katona_bound(double e, int t);

// Maximum number of t-cliques in an n-vertex graph of maximum degree
// max_degree: q binom(max_degree+1, t) + binom(rem, t).
std::uint64_t chase_gls_bound(std::uint64_t n, std::uint64_t max_degree, int t);

// Hypergraph analogue under the (j,p)-norm.  Subcritical
// (p <= (t-j)/(r-j)): max{binom(u,t), 0} with
// binom(u,j)^(1/p) binom(u-j,r-j) = C.  Supercritical:
// C^p htilde(stilde_real).
BoundResult hyperclique_bound(double p, int t, int r, int j, double C);

}  // namespace cliquenorm
