#pragma once

#include <cstdint>

namespace cliquenorm {

// Parameters selecting a clique-count regime: clique size t, norm exponent p,
// and (r, j) for the r-uniform hypergraph variant.  The plain graph case is
// (r, j) = (2, 1); every hypergraph formula reduces to its graph counterpart
// there.
struct RegimeParams {
  int t = 3;
  double p = 1.0;
  int r = 2;
  int j = 1;

  // The p threshold separating the one-big-clique regime from the
  // many-small-cliques regime: t-1 for graphs, (t-j)/(r-j) in general.
  double threshold() const { return static_cast<double>(t - j) / (r - j); }
  bool supercritical() const { return p > threshold(); }
  bool is_graph_case() const { return r == 2 && j == 1; }
};

// Throws std::invalid_argument unless t >= 3, p is finite and positive,
// and t > r > j >= 1.
void validate(const RegimeParams& params);

// Generalized binomial coefficient u(u-1)...(u-t+1)/t! for real u >= 0.
// May be negative for non-integral u < t-1; callers clamp at zero where the
// bound statements require max{binom(u,t), 0}.
double binom_real(double u, int t);

// u(u-1)...(u-k+1) for real u >= 0.
double falling_factorial(double u, int k);

// h(x) = binom(x,t) / (x (x-1)^p) on (t-1, inf).  Strictly positive.
double h_value(double x, const RegimeParams& params);
double log_h_value(double x, const RegimeParams& params);  // natural log

// g(x) = sum_{i=1}^{t-1} (i-1)/(x-i) + t - 1 - p.  Strictly decreasing on
// (t-1, inf) with a pole at t-1; its unique root locates the maximum of h.
double g_value(double x, const RegimeParams& params);

// htilde(x) = binom(x,t) / (binom(x,j) binom(x-j,r-j)^p) on (t-1, inf).
double htilde_value(double x, const RegimeParams& params);
double log_htilde_value(double x, const RegimeParams& params);

// gtilde(x) = sum_{i=j}^{t-1} 1/(x-i) - p sum_{i=j}^{r-1} 1/(x-i), the
// logarithmic derivative of htilde.  At (r,j) = (2,1) this equals
// g(x)/(x-1).
double gtilde_value(double x, const RegimeParams& params);

// Unique root of g on (t-1, inf); requires p > t-1.
double solve_s_real(const RegimeParams& params);

// Integer >= t maximizing h; on an exact tie the smaller integer.
// Requires p > t-1.
long long select_s_int(const RegimeParams& params);

// Unique root of gtilde on (t-1, inf); requires p > (t-j)/(r-j).
double solve_s_real_hyper(const RegimeParams& params);

// Unique u > 1 with u^(1/p) (u-1) = C, for C > 0.
double solve_u_small(double C, const RegimeParams& params);

// Unique u > r-1 with binom(u,j)^(1/p) binom(u-j,r-j) = C, for C > 0.
double solve_u_hyper(double C, const RegimeParams& params);

}  // namespace cliquenorm
