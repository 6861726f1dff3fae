#include "cliquenorm/realmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cliquenorm {
namespace {

constexpr double kXTolerance = 1e-12;  // absolute, on the solver variable
constexpr int kMaxBisectIters = 200;

// Direct evaluation of h / htilde is fine for moderate exponents; beyond
// this (x-1)^p runs out of double range and we go through logs.
constexpr double kLogSpaceP = 30.0;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_domain(double x, int t, const char* fn) {
  if (!(x > t - 1))
    throw std::invalid_argument(std::string(fn) + ": x must exceed t-1");
}

// log of the falling factorial u(u-1)...(u-k+1), all factors positive.
double log_falling(double u, int k) {
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += std::log(u - i);
  return s;
}

// Root of a function that is positive just right of t-1 and negative for
// large x, with a unique sign change.  Bracket by shrinking toward the pole
// and doubling away from it, then bisect to kXTolerance.
template <typename F>
double bisect_from_pole(int t, F&& f, const char* fn) {
  double offset = 1e-6;
  int guard = 0;
  while (f(t - 1 + offset) <= 0.0) {
    offset /= 16.0;
    if (++guard > 120)
      throw std::runtime_error(std::string(fn) + ": failed to bracket root");
  }
  double lo = t - 1 + offset;
  double step = 1.0;
  guard = 0;
  while (f(t - 1 + step) > 0.0) {
    step *= 2.0;
    if (++guard > 200)
      throw std::runtime_error(std::string(fn) + ": failed to bracket root");
  }
  double hi = t - 1 + step;
  for (int i = 0; i < kMaxBisectIters && hi - lo > kXTolerance; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void validate(const RegimeParams& params) {
  if (params.t < 3)
    throw std::invalid_argument("RegimeParams: t must be at least 3");
  if (!std::isfinite(params.p) || !(params.p > 0))
    throw std::invalid_argument("RegimeParams: p must be finite and positive");
  if (!(params.t > params.r && params.r > params.j && params.j >= 1))
    throw std::invalid_argument("RegimeParams: need t > r > j >= 1");
}

double binom_real(double u, int t) {
  if (t < 1) throw std::invalid_argument("binom_real: t must be at least 1");
  if (!(u >= 0) || std::isnan(u))
    throw std::invalid_argument("binom_real: u must be nonnegative");
  double prod = 1.0;
  for (int i = 0; i < t; ++i) prod *= u - i;
  return prod / factorial(t);
}

double falling_factorial(double u, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  if (!(u >= 0) || std::isnan(u))
    throw std::invalid_argument("falling_factorial: u must be nonnegative");
  double prod = 1.0;
  for (int i = 0; i < k; ++i) prod *= u - i;
  return prod;
}

double log_h_value(double x, const RegimeParams& params) {
  validate(params);
  require_domain(x, params.t, "log_h_value");
  return log_falling(x, params.t) - std::log(factorial(params.t)) -
         std::log(x) - params.p * std::log(x - 1);
}

double h_value(double x, const RegimeParams& params) {
  validate(params);
  require_domain(x, params.t, "h_value");
  if (params.p > kLogSpaceP) return std::exp(log_h_value(x, params));
  return binom_real(x, params.t) / (x * std::pow(x - 1, params.p));
}

double g_value(double x, const RegimeParams& params) {
  validate(params);
  require_domain(x, params.t, "g_value");
  double sum = 0.0;
  for (int i = 1; i <= params.t - 1; ++i) sum += (i - 1) / (x - i);
  return sum + params.t - 1 - params.p;
}

double log_htilde_value(double x, const RegimeParams& params) {
  validate(params);
  require_domain(x, params.t, "log_htilde_value");
  const int r = params.r, j = params.j;
  return log_falling(x, params.t) - std::log(factorial(params.t)) -
         (log_falling(x, j) - std::log(factorial(j))) -
         params.p * (log_falling(x - j, r - j) - std::log(factorial(r - j)));
}

double htilde_value(double x, const RegimeParams& params) {
  validate(params);
  require_domain(x, params.t, "htilde_value");
  if (params.p > kLogSpaceP) return std::exp(log_htilde_value(x, params));
  const int r = params.r, j = params.j;
  return binom_real(x, params.t) /
         (binom_real(x, j) * std::pow(binom_real(x - j, r - j), params.p));
}

double gtilde_value(double x, const RegimeParams& params) {
  validate(params);
  require_domain(x, params.t, "gtilde_value");
  double pos = 0.0;
  for (int i = params.j; i <= params.t - 1; ++i) pos += 1.0 / (x - i);
  double neg = 0.0;
  for (int i = params.j; i <= params.r - 1; ++i) neg += 1.0 / (x - i);
  return pos - params.p * neg;
}

double solve_s_real(const RegimeParams& params) {
  validate(params);
  if (!(params.p > params.t - 1))
    throw std::invalid_argument("solve_s_real: requires p > t-1");
  return bisect_from_pole(
      params.t, [&](double x) { return g_value(x, params); }, "solve_s_real");
}

long long select_s_int(const RegimeParams& params) {
  const double s = solve_s_real(params);
  const long long t = params.t;
  long long lo = std::max<long long>(t, static_cast<long long>(std::floor(s)));
  long long hi = std::max<long long>(t, static_cast<long long>(std::ceil(s)));
  if (lo == hi) return lo;
  const double h_lo = h_value(static_cast<double>(lo), params);
  const double h_hi = h_value(static_cast<double>(hi), params);
  return h_lo >= h_hi ? lo : hi;  // exact tie takes the smaller integer
}

double solve_s_real_hyper(const RegimeParams& params) {
  validate(params);
  if (!(params.p > params.threshold()))
    throw std::invalid_argument(
        "solve_s_real_hyper: requires p > (t-j)/(r-j)");
  return bisect_from_pole(
      params.t, [&](double x) { return gtilde_value(x, params); },
      "solve_s_real_hyper");
}

double solve_u_small(double C, const RegimeParams& params) {
  validate(params);
  if (!(C > 0) || !std::isfinite(C))
    throw std::invalid_argument("solve_u_small: C must be positive");
  const double p = params.p;
  const double target = std::log(C);
  // u^(1/p)(u-1) is 0 at u=1 and exceeds C at u=C+2, so bisect the log form.
  double lo = 1.0;
  double hi = C + 2.0;
  for (int i = 0;
       i < kMaxBisectIters && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
    double mid = 0.5 * (lo + hi);
    double val = mid > 1.0 ? std::log(mid) / p + std::log(mid - 1.0)
                           : -std::numeric_limits<double>::infinity();
    (val < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double solve_u_hyper(double C, const RegimeParams& params) {
  validate(params);
  if (!(C > 0) || !std::isfinite(C))
    throw std::invalid_argument("solve_u_hyper: C must be positive");
  const int r = params.r, j = params.j;
  const double p = params.p;
  const double target = std::log(C);
  const double log_jfact = std::log(factorial(j));
  const double log_rjfact = std::log(factorial(r - j));
  auto value = [&](double u) {
    return (log_falling(u, j) - log_jfact) / p +
           (log_falling(u - j, r - j) - log_rjfact) - target;
  };
  // binom(u,j)^(1/p) binom(u-j,r-j) vanishes at u = r-1 and increases
  // without bound, so grow the right bracket geometrically.
  const double base = r - 1;
  double step = 1.0;
  int guard = 0;
  while (value(base + step) <= 0.0) {
    step *= 2.0;
    if (++guard > 300)
      throw std::runtime_error("solve_u_hyper: failed to bracket root");
  }
  double lo = base;
  double hi = base + step;
  for (int i = 0;
       i < kMaxBisectIters && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
    double mid = 0.5 * (lo + hi);
    (value(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cliquenorm
