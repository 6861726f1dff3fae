#include "cliquenorm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cliquenorm/combinatorics.hpp"
#include "cliquenorm/realmath.hpp"

namespace cliquenorm {
namespace {

// C^p * h(x) (or htilde), through logs once the direct product risks
// overflowing: (u-1)^p leaves double range quickly.
double scaled_peak(double C, const RegimeParams& params, double x,
                   bool hyper) {
  if (C == 0.0) return 0.0;
  if (params.p > 30.0 || C > 1e6) {
    const double log_h = hyper ? log_htilde_value(x, params)
                               : log_h_value(x, params);
    return std::exp(params.p * std::log(C) + log_h);
  }
  const double h = hyper ? htilde_value(x, params) : h_value(x, params);
  return std::pow(C, params.p) * h;
}

void check_c(double C, const char* fn) {
  if (std::isnan(C) || C < 0 || std::isinf(C))
    throw std::invalid_argument(std::string(fn) +
                                ": C must be finite and nonnegative");
}

}  // namespace

BoundResult clique_bound(double p, int t, double C) {
  if (std::isinf(p))
    throw std::invalid_argument(
        "clique_bound: p = infinity is the maximum-degree regime; use "
        "chase_gls_bound");
  if (t < 3) throw std::invalid_argument("clique_bound: t must be at least 3");
  check_c(C, "clique_bound");
  RegimeParams params{t, p};
  validate(params);

  BoundResult result;
  if (!params.supercritical()) {
    result.regime = Regime::subcritical;
    result.u = C == 0.0 ? 1.0 : solve_u_small(C, params);
    result.bound = std::max(binom_real(result.u, t), 0.0);
  } else {
    result.regime = Regime::supercritical;
    result.s_real = solve_s_real(params);
    result.s_int = select_s_int(params);
    result.u = static_cast<double>(*result.s_int);
    result.bound = scaled_peak(C, params, result.u, /*hyper=*/false);
  }
  return result;
}

double fixed_n_bound(int n, double p, int t, double C) {
  if (n < 1) throw std::invalid_argument("fixed_n_bound: n must be positive");
  if (t < 3) throw std::invalid_argument("fixed_n_bound: t must be at least 3");
  check_c(C, "fixed_n_bound");
  RegimeParams params{t, p};
  validate(params);
  if (!(p > t - 1))
    throw std::invalid_argument("fixed_n_bound: requires p > t-1");

  const double s_real = solve_s_real(params);
  // hypothesis n (s_real - 1)^p <= C^p, compared in log space
  const double lhs_log = std::log(static_cast<double>(n)) +
                         p * std::log(s_real - 1.0);
  const double rhs_log = C > 0 ? p * std::log(C)
                               : -std::numeric_limits<double>::infinity();
  if (lhs_log > rhs_log + 1e-9) {
    std::ostringstream msg;
    msg << "fixed_n_bound: hypothesis n (s_real-1)^p <= C^p fails: n=" << n
        << " s_real=" << s_real << " C=" << C << " p=" << p;
    throw PreconditionError(msg.str());
  }
  const double u = C * std::pow(static_cast<double>(n), -1.0 / p) + 1.0;
  return static_cast<double>(n) / u * binom_real(u, t);
}

double kruskal_katona_bound(double e, int t) {
  if (t < 3)
    throw std::invalid_argument("kruskal_katona_bound: t must be at least 3");
  if (std::isnan(e) || e < 0 || std::isinf(e))
    throw std::invalid_argument(
        "kruskal_katona_bound: e must be finite and nonnegative");
  const double u = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * e));
  return std::max(binom_real(u, t), 0.0);
}

std::uint64_t chase_gls_bound(std::uint64_t n, std::uint64_t max_degree,
                              int t) {
  if (n < 1)
    throw std::invalid_argument("chase_gls_bound: n must be positive");
  if (t < 2)
    throw std::invalid_argument("chase_gls_bound: t must be at least 2");
  const std::uint64_t block = max_degree + 1;
  const std::uint64_t q = n / block;
  const std::uint64_t rem = n % block;
  return q * binomial_u64(block, static_cast<std::uint64_t>(t)) +
         binomial_u64(rem, static_cast<std::uint64_t>(t));
}

BoundResult hyperclique_bound(double p, int t, int r, int j, double C) {
  if (std::isinf(p))
    throw std::invalid_argument("hyperclique_bound: p must be finite");
  check_c(C, "hyperclique_bound");
  RegimeParams params{t, p, r, j};
  validate(params);

  BoundResult result;
  if (!params.supercritical()) {
    result.regime = Regime::subcritical;
    result.u = C == 0.0 ? static_cast<double>(r - 1) : solve_u_hyper(C, params);
    result.bound = std::max(binom_real(result.u, t), 0.0);
  } else {
    result.regime = Regime::supercritical;
    result.s_real = solve_s_real_hyper(params);
    result.u = *result.s_real;
    result.bound = scaled_peak(C, params, result.u, /*hyper=*/true);
  }
  return result;
}

}  // namespace cliquenorm
