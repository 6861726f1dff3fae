// cliquenorm: bounds on t-clique counts under degree-sequence lp-norm
// constraints, exact clique counting, extremal constructions, entropy-chain
// diagnostics, and verification sweeps.
//
// Exit codes: 0 success / no violations, 1 verification violations,
// 2 usage or parse errors, 3 bound-hypothesis failures.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquenorm/bounds.hpp"
#include "cliquenorm/entropy.hpp"
#include "cliquenorm/graph.hpp"
#include "cliquenorm/harness.hpp"
#include "cliquenorm/hypergraph.hpp"
#include "cliquenorm/json_io.hpp"
#include "cliquenorm/realmath.hpp"

namespace {

using namespace cliquenorm;

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void print_bound_human(const BoundResult& r) {
  std::cout << "regime: "
            << (r.regime == Regime::subcritical ? "subcritical"
                                                : "supercritical")
            << '\n';
  std::cout << "u: " << sig12(r.u) << '\n';
  if (r.s_real) std::cout << "s_real: " << sig12(*r.s_real) << '\n';
  if (r.s_int) std::cout << "s_int: " << *r.s_int << '\n';
  std::cout << "bound: " << sig12(r.bound) << '\n';
}

void print_report_human(const VerificationReport& r) {
  std::cout << "suite: " << r.suite << '\n';
  std::cout << "instances checked: " << r.instances_checked << '\n';
  if (r.suite == "fixed-n")
    std::cout << "hypothesis met: " << r.precondition_met << '\n';
  std::cout << "violations: " << r.violation_count << '\n';
  for (const auto& v : r.violations) {
    std::cout << "  " << v.instance << " p=" << sig12(v.p)
              << " count=" << sig12(v.count) << " bound=" << sig12(v.bound)
              << " norm=" << sig12(v.norm) << '\n';
  }
  std::cout << "max ratio: " << sig12(r.max_ratio);
  if (!r.witness.empty()) std::cout << " (witness " << r.witness << ")";
  std::cout << '\n';
  if (r.per_p.size() > 1) {
    for (const auto& s : r.per_p) {
      std::cout << "  p=" << sig12(s.p) << ": max_ratio=" << sig12(s.max_ratio);
      if (!s.witness.empty()) std::cout << " witness=" << s.witness;
      std::cout << '\n';
    }
  }
  std::cout << "elapsed: " << sig12(r.elapsed_seconds) << " s\n";
  std::cout << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

struct BoundArgs {
  double p = 1.0;
  int t = 3;
  double C = 0.0;
  int r = 0;
  int j = 0;
  int n = 0;
  bool json = false;
};

int run_bound(const BoundArgs& args) {
  const bool hyper = args.r > 0 || args.j > 0;
  if (hyper && args.n > 0)
    throw std::invalid_argument(
        "bound: --n applies to graphs only (no fixed-n hypergraph bound)");
  if (args.n > 0) {
    const double bound = fixed_n_bound(args.n, args.p, args.t, args.C);
    const double u =
        args.C * std::pow(static_cast<double>(args.n), -1.0 / args.p) + 1.0;
    if (args.json) {
      nlohmann::json out{{"n", args.n}, {"u", u}, {"bound", bound}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "u: " << sig12(u) << '\n';
      std::cout << "bound: " << sig12(bound) << '\n';
    }
    return 0;
  }
  const BoundResult res =
      hyper ? hyperclique_bound(args.p, args.t, args.r, args.j, args.C)
            : clique_bound(args.p, args.t, args.C);
  if (args.json) {
    std::cout << nlohmann::json(res).dump() << '\n';
  } else {
    print_bound_human(res);
  }
  return 0;
}

struct CountArgs {
  std::string input;
  int t = 3;
  bool hyper = false;
};

int run_count(const CountArgs& args) {
  if (args.hyper) {
    const Hypergraph h = read_hypergraph_file(args.input);
    std::cout << count_hypercliques(h, args.t) << '\n';
  } else {
    const Graph g = read_graph_file(args.input);
    std::cout << count_cliques(g, args.t) << '\n';
  }
  return 0;
}

struct ConstructArgs {
  std::string type;
  std::string out;
  int u = 0;
  std::vector<int> sizes;
  int n = 0;
  int delta = -1;
  int r = 0;
  int m = 1;
};

int run_construct(const ConstructArgs& args) {
  if (args.type == "clique") {
    if (args.u < 1) throw std::invalid_argument("construct: need --u >= 1");
    write_graph_file(args.out, construct_disjoint_cliques({args.u}));
  } else if (args.type == "disjoint") {
    if (args.sizes.empty())
      throw std::invalid_argument("construct: need --sizes");
    write_graph_file(args.out, construct_disjoint_cliques(args.sizes));
  } else if (args.type == "gls") {
    if (args.n < 1 || args.delta < 0)
      throw std::invalid_argument("construct: need --n and --delta");
    write_graph_file(args.out, construct_gls(args.n, args.delta));
  } else if (args.type == "hyper-complete") {
    if (args.u < 1 || args.r < 1)
      throw std::invalid_argument("construct: need --u and --r");
    write_hypergraph_file(
        args.out, construct_disjoint_complete_hyper(args.m, args.u, args.r));
  } else {
    throw std::invalid_argument("construct: unknown --type " + args.type);
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int n = 5;
  int t = 3;
  int r = 3;
  int j = 1;
  double p = 1.0;
  std::vector<double> p_list;
  std::uint64_t samples = 1000;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
  bool allow_n8 = false;
  std::string construction = "clique";
  int u = 3;
  int m = 1;
  int grid = 64;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  std::optional<VerificationReport> report;
  if (args.suite == "graphs-exhaustive") {
    report = verify_exhaustive_graphs(
        args.n, args.t,
        args.p_list.empty() ? std::vector<double>{1.0} : args.p_list,
        args.allow_n8);
  } else if (args.suite == "graphs-random") {
    report = verify_random_graphs(
        args.n, args.samples, args.edge_prob, args.t,
        args.p_list.empty() ? std::vector<double>{1.0} : args.p_list,
        args.seed);
  } else if (args.suite == "hyper-exhaustive") {
    report = verify_exhaustive_hypergraphs(
        args.n, args.r, args.j, args.t,
        args.p_list.empty() ? std::vector<double>{1.0} : args.p_list);
  } else if (args.suite == "fixed-n") {
    report = verify_fixed_n(args.n, args.t, args.p, args.samples, args.seed);
  } else if (args.suite == "tightness") {
    TightnessSpec spec;
    if (args.construction == "clique")
      spec.kind = TightnessSpec::Kind::single_clique;
    else if (args.construction == "disjoint")
      spec.kind = TightnessSpec::Kind::disjoint_cliques;
    else if (args.construction == "fixed-n")
      spec.kind = TightnessSpec::Kind::fixed_n;
    else
      throw std::invalid_argument("verify: unknown --construction " +
                                  args.construction);
    spec.u = args.u;
    spec.m = args.m;
    const TightnessResult res = verify_tightness(spec, args.t, args.p);
    if (args.json) {
      nlohmann::json out{{"count", res.count},
                         {"norm", res.norm},
                         {"bound", res.bound},
                         {"ratio", res.ratio}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "count: " << sig12(res.count) << '\n'
                << "norm: " << sig12(res.norm) << '\n'
                << "bound: " << sig12(res.bound) << '\n'
                << "ratio: " << sig12(res.ratio) << '\n';
    }
    return std::abs(res.ratio - 1.0) <= 1e-9 ? 0 : 1;
  } else if (args.suite == "prop9") {
    const Prop9Report res = check_proposition9(args.p, args.t, args.grid);
    if (args.json) {
      nlohmann::json out{{"s_real", res.s_real},
                         {"root_residual", res.root_residual},
                         {"peak_derivative", res.peak_derivative},
                         {"unimodal_ok", res.unimodal_ok},
                         {"monotone_ok", res.monotone_ok}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "s_real: " << sig12(res.s_real) << '\n'
                << "root residual: " << sig12(res.root_residual) << '\n'
                << "peak derivative: " << sig12(res.peak_derivative) << '\n'
                << "unimodal: " << (res.unimodal_ok ? "ok" : "FAIL") << '\n'
                << "monotone: " << (res.monotone_ok ? "ok" : "FAIL") << '\n';
    }
    return res.passed() ? 0 : 1;
  } else {
    throw std::invalid_argument("verify: unknown --suite " + args.suite);
  }

  if (args.json) {
    std::cout << nlohmann::json(*report).dump() << '\n';
  } else {
    print_report_human(*report);
  }
  return report->passed() ? 0 : 1;
}

struct EntropyArgs {
  std::string input;
  int t = 3;
  std::optional<double> p;
  std::optional<double> u;
  bool hyper = false;
  int r = 3;
  int j = 1;
};

void print_chain(const SetFamily& family, const EntropyChainReport& chain) {
  std::cout << "members: " << family.members.size() << '\n';
  std::cout << "H:";
  for (double h_k : chain.prefix_entropy) std::cout << ' ' << sig12(h_k);
  std::cout << "\nx:";
  for (double x_k : chain.x) std::cout << ' ' << sig12(x_k);
  const Lemma8Check check = lemma8_check(chain, kChainTolerance);
  std::cout << "\nmargins:";
  for (double m : check.margins) std::cout << ' ' << sig12(m);
  std::cout << "\nchain: " << (check.ok ? "ok" : "FAIL") << '\n';
  std::cout << "product: " << sig12(chain.product) << '\n';
}

int run_entropy(const EntropyArgs& args) {
  if (args.hyper) {
    const Hypergraph h = read_hypergraph_file(args.input);
    const SetFamily family = family_from_hypercliques(h, args.t);
    if (family.members.empty())
      throw std::invalid_argument("entropy: no " + std::to_string(args.t) +
                                  "-hyperclique in the input");
    print_chain(family, entropy_chain(family));
    if (args.p && args.u) {
      const HyperEntropyRecord rec = hyper_entropy_diagnostic(
          h, args.t, args.r, args.j, *args.p, *args.u);
      std::cout << "A: " << sig12(rec.A) << "  B: " << sig12(rec.B)
                << "  Cfac: " << sig12(rec.Cfac) << '\n';
      std::cout << "lhs5: " << sig12(rec.lhs5) << "  rhs5: " << sig12(rec.rhs5)
                << "  gap: " << sig12(rec.rhs5 - rec.lhs5) << '\n';
      std::cout << "AB^p: " << sig12(rec.abp)
                << "  target: " << sig12(rec.abp_target)
                << "  hypothesis: " << (rec.hypothesis ? "yes" : "no")
                << "  ok: " << (rec.abp_ok ? "yes" : "FAIL") << '\n';
    }
    return 0;
  }

  const Graph g = read_graph_file(args.input);
  const SetFamily family = family_from_cliques(g, args.t);
  if (family.members.empty())
    throw std::invalid_argument("entropy: no " + std::to_string(args.t) +
                                "-clique in the input");
  print_chain(family, entropy_chain(family));

  if (args.p) {
    const Claim6Record c6 = claim6_gap(g, args.t, *args.p);
    std::cout << "claim6: lhs=" << sig12(c6.lhs) << " rhs=" << sig12(c6.rhs)
              << " gap=" << sig12(c6.gap) << '\n';
    if (args.u) {
      if (*args.p <= args.t - 1) {
        const ClaimSmallPRecord c5 = claim_small_p(g, args.t, *args.p, *args.u);
        std::cout << "claim5: x1=" << sig12(c5.x1) << " x2=" << sig12(c5.x2)
                  << " lhs=" << sig12(c5.lhs) << " rhs=" << sig12(c5.rhs)
                  << " hypothesis=" << (c5.hypothesis ? "yes" : "no")
                  << " holds=" << (c5.holds ? "yes" : "FAIL") << '\n';
      } else {
        const Claim7Record c7 = claim7(g, args.t, *args.p, *args.u);
        std::cout << "claim7: x1=" << sig12(c7.x1) << " x2=" << sig12(c7.x2)
                  << " n=" << c7.n << " lhs=" << sig12(c7.lhs)
                  << " rhs=" << sig12(c7.rhs)
                  << " x1<=n=" << (c7.chain_n_ok ? "yes" : "FAIL")
                  << " hypothesis=" << (c7.hypothesis ? "yes" : "no")
                  << " holds=" << (c7.holds ? "yes" : "FAIL") << '\n';
      }
    }
  }
  return 0;
}

struct SweepArgs {
  int t = 3;
  double C = 0.0;
  double p_from = 0.5;
  double p_to = 5.0;
  int steps = 10;
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  if (args.steps < 1 || args.p_to < args.p_from || !(args.p_from > 0))
    throw std::invalid_argument("sweep: empty or invalid p range");
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out.empty() && args.out != "-") {
    file.open(args.out);
    if (!file) throw std::runtime_error("cannot open " + args.out);
    out = &file;
  }
  *out << "p,regime,u,bound\n";
  bool was_subcritical = args.p_from <= args.t - 1;
  for (int i = 0; i < args.steps; ++i) {
    const double p =
        args.steps == 1
            ? args.p_from
            : args.p_from + (args.p_to - args.p_from) * i / (args.steps - 1);
    const BoundResult res = clique_bound(p, args.t, args.C);
    const bool subcritical = res.regime == Regime::subcritical;
    if (was_subcritical && !subcritical)
      std::cerr << "regime flips to supercritical after p = " << args.t - 1
                << '\n';
    was_subcritical = subcritical;
    *out << sig12(p) << ',' << (subcritical ? "sub" : "super") << ','
         << sig12(res.u) << ',' << sig12(res.bound) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-clique count bounds under degree-sequence lp-norm caps"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand(
      "bound", "evaluate the clique-count bound for given (p, t, C)");
  bound->add_option("--p", bound_args.p, "norm exponent")->required();
  bound->add_option("--t", bound_args.t, "clique size")->required();
  bound->add_option("--C", bound_args.C, "norm cap")->required();
  bound->add_option("--r", bound_args.r, "hypergraph uniformity");
  bound->add_option("--j", bound_args.j, "hypergraph subset size");
  bound->add_option("--n", bound_args.n, "vertex count (fixed-n bound)");
  bound->add_flag("--json", bound_args.json, "JSON output");

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "count t-cliques in a file");
  count->add_option("--input", count_args.input, "graph or hypergraph file")
      ->required();
  count->add_option("--t", count_args.t, "clique size")->required();
  count->add_flag("--hyper", count_args.hyper, "input is a hypergraph");

  ConstructArgs construct_args;
  CLI::App* construct =
      app.add_subcommand("construct", "write an extremal construction");
  construct
      ->add_option("--type", construct_args.type,
                   "clique | disjoint | gls | hyper-complete")
      ->required();
  construct->add_option("--out", construct_args.out, "output file")
      ->required();
  construct->add_option("--u", construct_args.u, "clique order");
  construct->add_option("--sizes", construct_args.sizes, "component orders")
      ->delimiter(',');
  construct->add_option("--n", construct_args.n, "vertex count");
  construct->add_option("--delta", construct_args.delta, "maximum degree");
  construct->add_option("--r", construct_args.r, "uniformity");
  construct->add_option("--m", construct_args.m, "number of copies");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", verify_args.suite,
                   "graphs-exhaustive | graphs-random | hyper-exhaustive | "
                   "fixed-n | tightness | prop9")
      ->required();
  verify->add_option("--n", verify_args.n, "vertex count");
  verify->add_option("--t", verify_args.t, "clique size");
  verify->add_option("--r", verify_args.r, "uniformity");
  verify->add_option("--j", verify_args.j, "subset size");
  verify->add_option("--p", verify_args.p, "norm exponent");
  verify->add_option("--p-list", verify_args.p_list, "norm exponents")
      ->delimiter(',');
  verify->add_option("--samples", verify_args.samples, "random sample count");
  verify->add_option("--edge-prob", verify_args.edge_prob, "edge probability");
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_flag("--allow-n8", verify_args.allow_n8,
                   "raise the exhaustive guard to n=8");
  verify->add_option("--construction", verify_args.construction,
                     "clique | disjoint | fixed-n");
  verify->add_option("--u", verify_args.u, "clique order");
  verify->add_option("--m", verify_args.m, "number of copies");
  verify->add_option("--grid", verify_args.grid, "grid size for prop9");
  verify->add_flag("--json", verify_args.json, "JSON output");

  EntropyArgs entropy_args;
  CLI::App* entropy = app.add_subcommand(
      "entropy", "entropy chain and claim diagnostics for a file");
  entropy->add_option("--input", entropy_args.input, "input file")->required();
  entropy->add_option("--t", entropy_args.t, "clique size")->required();
  double entropy_p = 0.0, entropy_u = 0.0;
  CLI::Option* p_opt =
      entropy->add_option("--p", entropy_p, "norm exponent for diagnostics");
  CLI::Option* u_opt =
      entropy->add_option("--u", entropy_u, "comparison point u");
  entropy->add_flag("--hyper", entropy_args.hyper, "input is a hypergraph");
  entropy->add_option("--r", entropy_args.r, "uniformity");
  entropy->add_option("--j", entropy_args.j, "subset size");

  SweepArgs sweep_args;
  CLI::App* sweep =
      app.add_subcommand("sweep", "bound as a function of p, CSV output");
  sweep->add_option("--t", sweep_args.t, "clique size")->required();
  sweep->add_option("--C", sweep_args.C, "norm cap")->required();
  sweep->add_option("--p-from", sweep_args.p_from, "start of p range")
      ->required();
  sweep->add_option("--p-to", sweep_args.p_to, "end of p range")->required();
  sweep->add_option("--steps", sweep_args.steps, "number of rows")->required();
  sweep->add_option("--out", sweep_args.out, "CSV file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bound) return run_bound(bound_args);
    if (*count) return run_count(count_args);
    if (*construct) return run_construct(construct_args);
    if (*verify) return run_verify(verify_args);
    if (*entropy) {
      if (p_opt->count() > 0) entropy_args.p = entropy_p;
      if (u_opt->count() > 0) entropy_args.u = entropy_u;
      return run_entropy(entropy_args);
    }
    if (*sweep) return run_sweep(sweep_args);
  } catch (const cliquenorm::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
