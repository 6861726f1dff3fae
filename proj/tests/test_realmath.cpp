#include "cliquenorm/realmath.hpp"

#include <cmath>
#include <doctest.h>
#include <stdexcept>

using namespace cliquenorm;

namespace {

RegimeParams graph_params(int t, double p) { return RegimeParams{t, p}; }
RegimeParams hyper_params(int t, double p, int r, int j) {
  return RegimeParams{t, p, r, j};
}

// independent bisection on a monotone map, for expected values of the
// norm-inversion solvers
template <typename F>
double bisect_increasing(F f, double lo, double hi, double target) {
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("binom_real on integer and real arguments") {
  CHECK(binom_real(4, 3) == doctest::Approx(4.0));
  CHECK(binom_real(2, 3) == doctest::Approx(0.0));
  CHECK(binom_real(3.5, 3) == doctest::Approx(2.1875));  // 3.5*2.5*1.5/6
  CHECK(binom_real(10, 4) == doctest::Approx(210.0));
  CHECK(binom_real(0, 3) == doctest::Approx(0.0));
  // negative values occur between integers below t-1
  CHECK(binom_real(2.5, 4) < 0.0);
  CHECK_THROWS_AS(binom_real(-1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(binom_real(2.0, 0), std::invalid_argument);
}

TEST_CASE("h value") {
  CHECK(h_value(4, graph_params(3, 1)) == doctest::Approx(1.0 / 3));
  CHECK(h_value(3, graph_params(3, 3)) == doctest::Approx(1.0 / 24));
  CHECK_THROWS_AS(h_value(2.0, graph_params(3, 1)), std::invalid_argument);
  // log-space path agrees with the direct formula where both work
  CHECK(h_value(3.5, graph_params(3, 31.0)) ==
        doctest::Approx(binom_real(3.5, 3) / (3.5 * std::pow(2.5, 31.0))));
}

TEST_CASE("g value and sign structure") {
  CHECK(g_value(3, graph_params(3, 3)) == doctest::Approx(0.0));
  CHECK(g_value(10, graph_params(3, 3)) == doctest::Approx(1.0 / 8 - 1.0));
  // positive near the pole at t-1
  CHECK(g_value(2.0 + 1e-9, graph_params(3, 5)) > 0.0);
  CHECK_THROWS_AS(g_value(1.5, graph_params(3, 3)), std::invalid_argument);
}

TEST_CASE("g is strictly decreasing") {
  for (int t : {3, 4, 5}) {
    const double p = t - 1 + 1.5;
    double x = t - 1 + 1e-3;
    double prev = g_value(x, graph_params(t, p));
    while (x < 1e3) {
      x *= 1.7;
      if (x <= t - 1) continue;
      const double cur = g_value(x, graph_params(t, p));
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("solve_s_real closed forms") {
  // t=3: g(x) = 1/(x-2) + 2 - p, so s_real = 2 + 1/(p-2)
  for (double p : {2.5, 3.0, 4.0, 12.0}) {
    CHECK(solve_s_real(graph_params(3, p)) ==
          doctest::Approx(2.0 + 1.0 / (p - 2.0)).epsilon(1e-10));
  }
  // t=4, p=5: 2x^2 - 13x + 19 = 0, branch above 3
  CHECK(solve_s_real(graph_params(4, 5)) ==
        doctest::Approx((13.0 + std::sqrt(17.0)) / 4.0).epsilon(1e-10));
  CHECK_THROWS_AS(solve_s_real(graph_params(3, 2.0)), std::invalid_argument);
  CHECK_THROWS_AS(solve_s_real(graph_params(3, 1.0)), std::invalid_argument);
}

TEST_CASE("h is maximized at s_real (grid scan)") {
  const RegimeParams params = graph_params(4, 5);
  const double s = solve_s_real(params);
  const double peak = h_value(s, params);
  CHECK(s == doctest::Approx(4.280776).epsilon(1e-5));
  CHECK(peak > h_value(s - 0.01, params));
  CHECK(peak > h_value(s + 0.01, params));
}

TEST_CASE("select_s_int") {
  CHECK(select_s_int(graph_params(3, 3)) == 3);
  CHECK(select_s_int(graph_params(3, 2.5)) == 4);
  CHECK(select_s_int(graph_params(3, 4)) == 3);  // s_real = 2.5 clamps to t
  // h(s_int) beats every integer in [t, s_real + 2]
  for (double p : {2.2, 2.7, 3.5, 6.0}) {
    const RegimeParams params = graph_params(3, p);
    const long long s_int = select_s_int(params);
    const double best = h_value(static_cast<double>(s_int), params);
    const double s_real = solve_s_real(params);
    for (long long k = 3; k <= static_cast<long long>(s_real) + 2; ++k)
      CHECK(best >= h_value(static_cast<double>(k), params));
  }
}

TEST_CASE("solve_u_small") {
  CHECK(solve_u_small(12, graph_params(3, 1)) == doctest::Approx(4.0));
  CHECK(solve_u_small(6, graph_params(3, 2)) == doctest::Approx(4.0));
  CHECK(solve_u_small(2, graph_params(3, 1)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(solve_u_small(0.0, graph_params(3, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_u_small(-3.0, graph_params(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("norm inversion round trip") {
  for (double p : {0.5, 1.0, 2.0, 3.5}) {
    for (double u = 1.1; u <= 100.0; u *= 1.7) {
      const double c = std::pow(u, 1.0 / p) * (u - 1.0);
      const double back = solve_u_small(c, graph_params(3, p));
      CHECK(back == doctest::Approx(u).epsilon(1e-9));
    }
  }
}

TEST_CASE("gtilde reductions and roots") {
  // (r,j) = (2,1): gtilde = sum 1/(x-i) - p/(x-1) = g/(x-1)
  for (double x : {3.2, 4.0, 7.5}) {
    const RegimeParams hyper = hyper_params(4, 2.5, 2, 1);
    const RegimeParams graph = graph_params(4, 2.5);
    CHECK(gtilde_value(x, hyper) ==
          doctest::Approx(g_value(x, graph) / (x - 1)).epsilon(1e-12));
  }
  // root of gtilde for (t,r,j,p) = (4,3,1,2) is 3 + sqrt(2)
  const RegimeParams params = hyper_params(4, 2, 3, 1);
  CHECK(gtilde_value(3.0 + std::sqrt(2.0), params) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gtilde_value(10.0, params) < 0.0);
}

TEST_CASE("solve_s_real_hyper") {
  CHECK(solve_s_real_hyper(hyper_params(4, 2, 3, 1)) ==
        doctest::Approx(3.0 + std::sqrt(2.0)).epsilon(1e-10));
  // reduces to the graph solver at (r,j) = (2,1)
  CHECK(solve_s_real_hyper(hyper_params(3, 3, 2, 1)) ==
        doctest::Approx(solve_s_real(graph_params(3, 3))).epsilon(1e-10));
  // raising p pulls the root toward t-1
  const double s10 = solve_s_real_hyper(hyper_params(4, 10, 3, 1));
  CHECK(s10 > 3.0);
  CHECK(s10 < 3.0 + std::sqrt(2.0));
  CHECK_THROWS_AS(solve_s_real_hyper(hyper_params(4, 1.4, 3, 1)),
                  std::invalid_argument);
}

TEST_CASE("solve_u_hyper") {
  CHECK(solve_u_hyper(30, hyper_params(4, 1, 3, 1)) == doctest::Approx(5.0));
  CHECK(solve_u_hyper(12, hyper_params(4, 1, 3, 1)) == doctest::Approx(4.0));
  // C=6 solves u(u-1)(u-2)/2 = 6 strictly between 3 and 4
  const double expect = bisect_increasing(
      [](double u) { return u * (u - 1) * (u - 2) / 2.0; }, 3.0, 4.0, 6.0);
  const double got = solve_u_hyper(6, hyper_params(4, 1, 3, 1));
  CHECK(got == doctest::Approx(expect).epsilon(1e-10));
  CHECK(got > 3.0);
  CHECK(got < 4.0);
  CHECK_THROWS_AS(solve_u_hyper(0, hyper_params(4, 1, 3, 1)),
                  std::invalid_argument);
}

TEST_CASE("hypergraph functions reduce to graph functions at (r,j)=(2,1)") {
  for (int t : {3, 4, 5}) {
    for (double x = t - 1 + 0.25; x < 40; x *= 1.6) {
      for (double p : {0.5, 1.0, 2.0}) {
        CHECK(htilde_value(x, hyper_params(t, p, 2, 1)) ==
              doctest::Approx(h_value(x, graph_params(t, p))).epsilon(1e-12));
      }
    }
    for (double p : {0.7, 1.3, 2.6}) {
      for (double c : {0.5, 3.0, 42.0}) {
        CHECK(solve_u_hyper(c, hyper_params(t, p, 2, 1)) ==
              doctest::Approx(solve_u_small(c, graph_params(t, p)))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("unimodality of h around s_real") {
  for (double p : {2.3, 3.0, 5.5}) {
    const RegimeParams params = graph_params(3, p);
    const double s = solve_s_real(params);
    double prev = 0.0;
    for (int i = 8; i >= 1; --i) {  // approach s from the left
      const double x = 2.0 + (s - 2.0) * std::pow(0.5, i);
      const double cur = h_value(x, params);
      CHECK(cur > prev);
      prev = cur;
    }
    CHECK(h_value(s, params) > prev);
    prev = h_value(s, params);
    for (double x = s * 1.5; x < 1e3; x *= 2.0) {
      const double cur = h_value(x, params);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("stilde_real decreases as p grows (empirical)") {
  const auto params = [](double p) { return hyper_params(5, p, 3, 2); };
  double prev = solve_s_real_hyper(params(3.1));
  for (double p : {3.5, 4.5, 7.0, 15.0}) {
    const double cur = solve_s_real_hyper(params(p));
    CHECK(cur < prev);
    CHECK(cur > 4.0);  // stays right of t-1
    prev = cur;
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(RegimeParams{2, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RegimeParams{3, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RegimeParams{3, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RegimeParams{4, 1.0, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RegimeParams{4, 1.0, 4, 1}), std::invalid_argument);
  CHECK_NOTHROW(validate(RegimeParams{4, 1.0, 3, 1}));
  // supercritical thresholds
  CHECK(RegimeParams{3, 2.0}.supercritical() == false);
  CHECK(RegimeParams{3, 2.0 + 1e-9}.supercritical() == true);
  CHECK(RegimeParams{4, 1.5, 3, 1}.supercritical() == false);
  CHECK(RegimeParams{4, 1.5 + 1e-9, 3, 1}.supercritical() == true);
}
