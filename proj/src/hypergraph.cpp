#include "cliquenorm/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cliquenorm/combinatorics.hpp"

namespace cliquenorm {
namespace {

// colexicographic order on equal-length sorted vectors
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::size_t Hypergraph::VecHash::operator()(
    const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
  if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
  if (r < 1) throw std::invalid_argument("Hypergraph: uniformity must be >= 1");
}

void Hypergraph::add_edge(std::vector<int> vertices) {
  if (static_cast<int>(vertices.size()) != r_)
    throw std::invalid_argument("Hypergraph::add_edge: wrong edge size");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= n_)
      throw std::invalid_argument("Hypergraph::add_edge: vertex out of range");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw std::invalid_argument("Hypergraph::add_edge: repeated vertex");
  }
  if (index_.count(vertices))
    throw std::invalid_argument("Hypergraph::add_edge: duplicate edge");
  index_.insert(vertices);
  edges_.push_back(std::move(vertices));
}

bool Hypergraph::has_edge(const std::vector<int>& sorted_vertices) const {
  return index_.count(sorted_vertices) > 0;
}

std::vector<int> Hypergraph::positive_degree_vertices() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_)
    for (int v : e) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::uint64_t subset_degree(const Hypergraph& h, std::span<const int> s) {
  if (static_cast<int>(s.size()) >= h.uniformity() || s.empty())
    throw std::invalid_argument("subset_degree: need 0 < |S| < r");
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= h.vertex_count())
      throw std::invalid_argument("subset_degree: vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("subset_degree: repeated vertex");
  }
  std::uint64_t count = 0;
  for (const auto& e : h.edges()) {
    if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end()))
      ++count;
  }
  return count;
}

double subset_degree_power_sum(const Hypergraph& h, int j, double p) {
  if (j < 1 || j >= h.uniformity())
    throw std::invalid_argument("subset_degree_power_sum: need 1 <= j < r");
  if (std::isnan(p) || !(p > 0) || std::isinf(p))
    throw std::invalid_argument(
        "subset_degree_power_sum: p must be finite and positive");
  // tally deg(S) over the j-subsets of each edge; subsets never touched by
  // an edge have degree 0 and contribute nothing
  std::map<std::vector<int>, std::uint64_t> deg;
  const int r = h.uniformity();
  std::vector<int> buffer(static_cast<std::size_t>(j));
  for (const auto& e : h.edges()) {
    for_each_combination(r, j, [&](std::span<const int> idx) {
      for (int i = 0; i < j; ++i)
        buffer[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(idx[i])];
      ++deg[buffer];
    });
  }
  std::vector<const std::vector<int>*> keys;
  keys.reserve(deg.size());
  for (const auto& kv : deg) keys.push_back(&kv.first);
  std::sort(keys.begin(), keys.end(),
            [](const auto* a, const auto* b) { return colex_less(*a, *b); });
  std::vector<double> terms;
  terms.reserve(keys.size());
  for (const auto* key : keys)
    terms.push_back(std::pow(static_cast<double>(deg.at(*key)), p));
  return pairwise_sum(terms);
}

double hyper_norm(const Hypergraph& h, int j, double p) {
  const double sum = subset_degree_power_sum(h, j, p);
  return sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / p);
}

namespace {

template <typename F>
void for_each_hyperclique_impl(const Hypergraph& h, int t, F&& f) {
  if (t < h.uniformity())
    throw std::invalid_argument("hypercliques: t must be at least r");
  const int r = h.uniformity();
  const std::vector<int> active = h.positive_degree_vertices();
  const int a = static_cast<int>(active.size());
  if (a < t) return;

  // index patterns for the r-subsets of a t-set, computed once
  std::vector<std::vector<int>> patterns;
  for_each_combination(t, r, [&](std::span<const int> idx) {
    patterns.emplace_back(idx.begin(), idx.end());
  });

  std::vector<int> candidate(static_cast<std::size_t>(t));
  std::vector<int> probe(static_cast<std::size_t>(r));
  for_each_combination(a, t, [&](std::span<const int> sel) {
    for (int i = 0; i < t; ++i)
      candidate[static_cast<std::size_t>(i)] =
          active[static_cast<std::size_t>(sel[i])];
    for (const auto& pattern : patterns) {
      for (int i = 0; i < r; ++i)
        probe[static_cast<std::size_t>(i)] =
            candidate[static_cast<std::size_t>(pattern[static_cast<std::size_t>(i)])];
      if (!h.has_edge(probe)) return;
    }
    f(candidate);
  });
}

}  // namespace

std::uint64_t count_hypercliques(const Hypergraph& h, int t) {
  std::uint64_t count = 0;
  for_each_hyperclique_impl(h, t, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<std::vector<int>> list_hypercliques(const Hypergraph& h, int t) {
  std::vector<std::vector<int>> out;
  for_each_hyperclique_impl(h, t,
                            [&](const std::vector<int>& c) { out.push_back(c); });
  return out;
}

Hypergraph construct_complete_hyper(int u, int r) {
  if (r < 1) throw std::invalid_argument("construct_complete_hyper: r >= 1");
  if (u < r)
    throw std::invalid_argument("construct_complete_hyper: need u >= r");
  Hypergraph h(u, r);
  for_each_combination(u, r, [&](std::span<const int> idx) {
    h.add_edge(std::vector<int>(idx.begin(), idx.end()));
  });
  return h;
}

Hypergraph construct_disjoint_complete_hyper(int m, int u, int r) {
  if (m < 1)
    throw std::invalid_argument("construct_disjoint_complete_hyper: m >= 1");
  if (r < 1 || u < r)
    throw std::invalid_argument("construct_disjoint_complete_hyper: need u >= r");
  Hypergraph h(m * u, r);
  for (int block = 0; block < m; ++block) {
    const int base = block * u;
    for_each_combination(u, r, [&](std::span<const int> idx) {
      std::vector<int> edge(idx.begin(), idx.end());
      for (int& v : edge) v += base;
      h.add_edge(std::move(edge));
    });
  }
  return h;
}

namespace {

std::vector<std::vector<int>> edge_universe(int n, int r) {
  std::vector<std::vector<int>> universe;
  for_each_combination(n, r, [&](std::span<const int> idx) {
    universe.emplace_back(idx.begin(), idx.end());
  });
  return universe;
}

}  // namespace

Hypergraph hypergraph_from_edge_mask(int n, int r, std::uint64_t mask) {
  const auto universe = edge_universe(n, r);
  if (universe.size() > 24)
    throw std::invalid_argument(
        "hypergraph_from_edge_mask: need C(n,r) <= 24");
  if ((mask >> universe.size()) != 0)
    throw std::invalid_argument("hypergraph_from_edge_mask: mask out of range");
  Hypergraph h(n, r);
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if ((mask >> k) & 1) h.add_edge(universe[k]);
  }
  return h;
}

void for_each_hypergraph_in_range(
    int n, int r, std::uint64_t begin_mask, std::uint64_t end_mask,
    const std::function<void(const Hypergraph&, std::uint64_t)>& visit) {
  const auto universe = edge_universe(n, r);
  if (universe.size() > 24)
    throw std::invalid_argument("for_each_hypergraph: need C(n,r) <= 24");
  const std::uint64_t total = std::uint64_t(1) << universe.size();
  if (begin_mask > end_mask || end_mask > total)
    throw std::invalid_argument("for_each_hypergraph: bad mask range");
  for (std::uint64_t mask = begin_mask; mask < end_mask; ++mask) {
    Hypergraph h(n, r);
    for (std::size_t k = 0; k < universe.size(); ++k) {
      if ((mask >> k) & 1) h.add_edge(universe[k]);
    }
    visit(h, mask);
  }
}

void for_each_hypergraph(
    int n, int r,
    const std::function<void(const Hypergraph&, std::uint64_t)>& visit) {
  const auto universe = edge_universe(n, r);
  if (universe.size() > 24)
    throw std::invalid_argument("for_each_hypergraph: need C(n,r) <= 24");
  for_each_hypergraph_in_range(n, r, 0, std::uint64_t(1) << universe.size(),
                               visit);
}

Hypergraph read_hypergraph(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    long long value;
    while (words >> value) tokens.push_back(value);
    if (!words.eof())
      throw std::runtime_error("read_hypergraph: non-numeric token");
  }
  if (tokens.size() < 3)
    throw std::runtime_error("read_hypergraph: missing header");
  const long long n = tokens[0];
  const long long m = tokens[1];
  const long long r = tokens[2];
  if (n < 0 || m < 0 || r < 1 || n > 1'000'000 || r > n)
    throw std::runtime_error("read_hypergraph: bad header");
  if (static_cast<long long>(tokens.size()) != 3 + m * r)
    throw std::runtime_error("read_hypergraph: edge count mismatch");
  Hypergraph h(static_cast<int>(n), static_cast<int>(r));
  for (long long e = 0; e < m; ++e) {
    std::vector<int> edge;
    edge.reserve(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i) {
      const long long v = tokens[static_cast<std::size_t>(3 + e * r + i)];
      if (v < 0 || v >= n)
        throw std::runtime_error("read_hypergraph: vertex out of range");
      if (i > 0 && v <= edge.back())
        throw std::runtime_error(
            "read_hypergraph: edge vertices must be strictly increasing");
      edge.push_back(static_cast<int>(v));
    }
    if (h.has_edge(edge)) throw std::runtime_error("read_hypergraph: duplicate edge");
    h.add_edge(std::move(edge));
  }
  return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  std::vector<std::vector<int>> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  out << h.vertex_count() << ' ' << edges.size() << ' ' << h.uniformity()
      << '\n';
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i)
      out << e[i] << (i + 1 == e.size() ? '\n' : ' ');
  }
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_hypergraph(out, h);
}

}  // namespace cliquenorm
