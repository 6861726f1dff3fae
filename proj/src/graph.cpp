#include "cliquenorm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cliquenorm/combinatorics.hpp"

namespace cliquenorm {
namespace {

constexpr int kWordBits = 64;

int popcount_words(const std::uint64_t* words, int stride) {
  int c = 0;
  for (int i = 0; i < stride; ++i) c += std::popcount(words[i]);
  return c;
}

// Calls f(vertex) for every set bit.
template <typename F>
void for_each_bit(const std::uint64_t* words, int stride, F&& f) {
  for (int w = 0; w < stride; ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      f(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
}

// Vertices in an order where each vertex has minimum degree among the ones
// remaining; later-neighbor sets under this order stay small on sparse
// graphs, which keeps the clique search narrow.
std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(g.degrees().begin(), g.degrees().end());
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || deg[static_cast<std::size_t>(v)] <
                          deg[static_cast<std::size_t>(best)])
        best = v;
    }
    removed[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    auto row = g.neighbor_row(best);
    for_each_bit(row.data(), g.words_per_row(), [&](int w) {
      if (!removed[static_cast<std::size_t>(w)])
        --deg[static_cast<std::size_t>(w)];
    });
  }
  return order;
}

struct CliqueSearch {
  int t;
  int stride;
  const std::uint64_t* later;  // oriented adjacency, one row per vertex
  std::uint64_t* scratch;      // t rows of stride words

  std::uint64_t count(const std::uint64_t* cand, int depth) const {
    if (depth == t - 1) return popcount_words(cand, stride);
    std::uint64_t total = 0;
    std::uint64_t* next = scratch + static_cast<std::size_t>(depth) * stride;
    for (int w = 0; w < stride; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int v = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* row = later + static_cast<std::size_t>(v) * stride;
        int pc = 0;
        for (int i = 0; i < stride; ++i) {
          next[i] = cand[i] & row[i];
          pc += std::popcount(next[i]);
        }
        if (pc >= t - depth - 1) total += count(next, depth + 1);
      }
    }
    return total;
  }
};

// Counts k-cliques inside the candidate set, choosing vertices in
// increasing index order; `visit` may be null when only the count matters.
struct MaskedSearch {
  const Graph& g;
  int stride;
  std::uint64_t* scratch;  // (k+1) rows
  const std::function<void(std::span<const int>)>* visit = nullptr;
  std::vector<int> chosen;

  std::uint64_t run(const std::uint64_t* cand, int k) {
    if (k == 0) {
      if (visit) (*visit)(std::span<const int>(chosen));
      return 1;
    }
    std::uint64_t total = 0;
    std::uint64_t* next =
        scratch + static_cast<std::size_t>(k - 1) * stride;
    for (int w = 0; w < stride; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        const int v = w * kWordBits + b;
        if (k == 1) {
          if (visit) {
            chosen.push_back(v);
            (*visit)(std::span<const int>(chosen));
            chosen.pop_back();
          }
          ++total;
          continue;
        }
        auto row = g.neighbor_row(v);
        // restrict to neighbors of v with index above v
        int pc = 0;
        for (int i = 0; i < stride; ++i) {
          std::uint64_t m = cand[i] & row[i];
          if (i < w)
            m = 0;
          else if (i == w)
            m &= ~((std::uint64_t(2) << b) - 1);
          next[i] = m;
          pc += std::popcount(m);
        }
        if (pc >= k - 1) {
          chosen.push_back(v);
          total += run(next, k - 1);
          chosen.pop_back();
        }
      }
    }
    return total;
  }
};

std::uint64_t masked_clique_run(
    const Graph& g, const std::vector<std::uint64_t>& cand, int k,
    const std::function<void(std::span<const int>)>* visit,
    std::vector<int> prefix = {}) {
  const int stride = g.words_per_row();
  std::vector<std::uint64_t> scratch(
      static_cast<std::size_t>(std::max(k, 1)) * stride);
  MaskedSearch search{g, stride, scratch.data(), visit, std::move(prefix)};
  return search.run(cand.data(), k);
}

std::vector<std::uint64_t> full_vertex_mask(const Graph& g) {
  const int n = g.vertex_count();
  const int stride = g.words_per_row();
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(stride), 0);
  for (int v = 0; v < n; ++v)
    mask[static_cast<std::size_t>(v / kWordBits)] |= std::uint64_t(1)
                                                     << (v % kWordBits);
  return mask;
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  n_ = n;
  stride_ = n == 0 ? 1 : (n + kWordBits - 1) / kWordBits;
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
  deg_.assign(static_cast<std::size_t>(n_), 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: loops rejected");
  if (has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * stride_ + v / kWordBits] |=
      std::uint64_t(1) << (v % kWordBits);
  bits_[static_cast<std::size_t>(v) * stride_ + u / kWordBits] |=
      std::uint64_t(1) << (u % kWordBits);
  ++deg_[static_cast<std::size_t>(u)];
  ++deg_[static_cast<std::size_t>(v)];
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph::has_edge: vertex out of range");
  return (bits_[static_cast<std::size_t>(u) * stride_ + v / kWordBits] >>
          (v % kWordBits)) &
         1;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph::degree: vertex out of range");
  return deg_[static_cast<std::size_t>(v)];
}

std::span<const std::uint64_t> Graph::neighbor_row(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph::neighbor_row: vertex out of range");
  return {bits_.data() + static_cast<std::size_t>(v) * stride_,
          static_cast<std::size_t>(stride_)};
}

double degree_norm(const Graph& g, double p) {
  if (std::isnan(p) || !(p > 0))
    throw std::invalid_argument("degree_norm: p must be positive");
  if (std::isinf(p)) {
    int max_deg = 0;
    for (int d : g.degrees()) max_deg = std::max(max_deg, d);
    return static_cast<double>(max_deg);
  }
  double sum = 0.0;
  for (int d : g.degrees()) sum += std::pow(static_cast<double>(d), p);
  return sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / p);
}

std::uint64_t count_cliques(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("count_cliques: t must be positive");
  const int n = g.vertex_count();
  if (t == 1) return static_cast<std::uint64_t>(n);
  if (t == 2) return g.edge_count();
  if (t > n) return 0;

  const std::vector<int> order = degeneracy_order(g);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;

  const int stride = g.words_per_row();
  std::vector<std::uint64_t> later(static_cast<std::size_t>(n) * stride, 0);
  for (int v = 0; v < n; ++v) {
    const int pv = pos[static_cast<std::size_t>(v)];
    std::uint64_t* row = later.data() + static_cast<std::size_t>(pv) * stride;
    for_each_bit(g.neighbor_row(v).data(), stride, [&](int w) {
      const int pw = pos[static_cast<std::size_t>(w)];
      if (pw > pv)
        row[pw / kWordBits] |= std::uint64_t(1) << (pw % kWordBits);
    });
  }

  std::vector<std::uint64_t> scratch(static_cast<std::size_t>(t) * stride);
  CliqueSearch search{t, stride, later.data(), scratch.data()};
  std::uint64_t total = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* row =
        later.data() + static_cast<std::size_t>(v) * stride;
    if (popcount_words(row, stride) >= t - 1) total += search.count(row, 1);
  }
  return total;
}

void for_each_clique(const Graph& g, int t,
                     const std::function<void(std::span<const int>)>& visit) {
  if (t < 1)
    throw std::invalid_argument("for_each_clique: t must be positive");
  if (t > g.vertex_count()) return;
  masked_clique_run(g, full_vertex_mask(g), t, &visit);
}

std::vector<std::vector<int>> list_cliques(const Graph& g, int t) {
  std::vector<std::vector<int>> out;
  for_each_clique(g, t, [&](std::span<const int> clique) {
    out.emplace_back(clique.begin(), clique.end());
  });
  return out;
}

std::uint64_t clique_extension_count(const Graph& g, std::span<const int> s,
                                     int t) {
  if (t < 1)
    throw std::invalid_argument("clique_extension_count: t must be positive");
  if (static_cast<int>(s.size()) > t)
    throw std::invalid_argument(
        "clique_extension_count: S has more than t vertices");
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b] || !g.has_edge(s[a], s[b]))
        throw std::invalid_argument(
            "clique_extension_count: S is not a clique");
    }
  }
  const int k = t - static_cast<int>(s.size());
  if (k == 0) return 1;

  std::vector<std::uint64_t> cand = full_vertex_mask(g);
  const int stride = g.words_per_row();
  for (int v : s) {
    auto row = g.neighbor_row(v);
    for (int i = 0; i < stride; ++i) cand[static_cast<std::size_t>(i)] &= row[i];
  }
  return masked_clique_run(g, cand, k, nullptr);
}

Graph construct_disjoint_cliques(const std::vector<int>& sizes) {
  if (sizes.empty())
    throw std::invalid_argument("construct_disjoint_cliques: empty size list");
  int n = 0;
  for (int s : sizes) {
    if (s < 1)
      throw std::invalid_argument(
          "construct_disjoint_cliques: sizes must be positive");
    n += s;
  }
  Graph g(n);
  int base = 0;
  for (int s : sizes) {
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) g.add_edge(base + a, base + b);
    base += s;
  }
  return g;
}

Graph construct_gls(int n, int max_degree) {
  if (n < 1) throw std::invalid_argument("construct_gls: n must be positive");
  if (max_degree < 0)
    throw std::invalid_argument("construct_gls: negative degree cap");
  const int block = max_degree + 1;
  const int q = n / block;
  const int rem = n % block;
  std::vector<int> sizes(static_cast<std::size_t>(q), block);
  if (rem > 0) sizes.push_back(rem);
  return construct_disjoint_cliques(sizes);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  const auto pairs = vertex_pairs(n);
  if (pairs.size() > 64)
    throw std::invalid_argument("graph_from_edge_mask: too many vertex pairs");
  if (pairs.size() < 64 && (mask >> pairs.size()) != 0)
    throw std::invalid_argument("graph_from_edge_mask: mask out of range");
  Graph g(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
  }
  return g;
}

void for_each_graph_in_range(
    int n, std::uint64_t begin_mask, std::uint64_t end_mask,
    const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 0 || n > 8)
    throw std::invalid_argument("for_each_graph: n must be at most 8");
  const std::uint64_t total = std::uint64_t(1)
                              << (static_cast<unsigned>(n) * (n - 1) / 2);
  if (begin_mask > end_mask || end_mask > total)
    throw std::invalid_argument("for_each_graph: bad mask range");
  for (std::uint64_t mask = begin_mask; mask < end_mask; ++mask)
    visit(graph_from_edge_mask(n, mask), mask);
}

void for_each_graph(
    int n, const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 0 || n > 8)
    throw std::invalid_argument("for_each_graph: n must be at most 8");
  const std::uint64_t total = std::uint64_t(1)
                              << (static_cast<unsigned>(n) * (n - 1) / 2);
  for_each_graph_in_range(n, 0, total, visit);
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("random_graph: edge_prob must be in [0,1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  // draw uniform doubles directly from the top 53 bits so the sampled edge
  // set is identical across standard library implementations
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_prob) g.add_edge(a, b);
    }
  }
  return g;
}

Graph read_graph(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    long long value;
    while (words >> value) tokens.push_back(value);
    if (!words.eof())
      throw std::runtime_error("read_graph: non-numeric token");
  }
  if (tokens.size() < 2) throw std::runtime_error("read_graph: missing header");
  const long long n = tokens[0];
  const long long m = tokens[1];
  // adjacency rows are dense bitsets, so n is capped to keep memory sane
  if (n < 0 || m < 0 || n > 20'000)
    throw std::runtime_error("read_graph: bad header");
  if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
    throw std::runtime_error("read_graph: edge count mismatch");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    const long long a = tokens[static_cast<std::size_t>(2 + 2 * e)];
    const long long b = tokens[static_cast<std::size_t>(3 + 2 * e)];
    if (!(0 <= a && a < b && b < n))
      throw std::runtime_error("read_graph: edge must satisfy 0 <= a < b < n");
    if (g.has_edge(static_cast<int>(a), static_cast<int>(b)))
      throw std::runtime_error("read_graph: duplicate edge");
    g.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (g.has_edge(a, b)) out << a << ' ' << b << '\n';
    }
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_graph(out, g);
}

}  // namespace cliquenorm
