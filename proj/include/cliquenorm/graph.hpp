#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cliquenorm {

using DegreeSequence = std::vector<int>;

// Simple undirected graph on vertices 0..n-1 with one bitset row per vertex.
// Rows are immutable except through add_edge; all queries are const and safe
// to run concurrently once construction is done.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  int words_per_row() const { return stride_; }

  // Rejects loops and out-of-range endpoints; adding an existing edge is a
  // no-op.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  const DegreeSequence& degrees() const { return deg_; }
  std::span<const std::uint64_t> neighbor_row(int v) const;

 private:
  int n_ = 0;
  int stride_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  DegreeSequence deg_;
};

// (sum_v deg(v)^p)^(1/p); p may be +infinity, which gives the maximum
// degree.  Rejects p <= 0.  Returns 0 for edgeless graphs.
double degree_norm(const Graph& g, double p);

// Exact number of t-cliques.  t=1 counts vertices, t=2 counts edges.
// Larger t uses a degeneracy-ordered search with bitset candidate
// intersections.
std::uint64_t count_cliques(const Graph& g, int t);

// Visits every t-clique exactly once as a sorted vertex span, in
// lexicographic order.
void for_each_clique(const Graph& g, int t,
                     const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> list_cliques(const Graph& g, int t);

// Number of t-cliques containing the clique S.  Rejects S that is not a
// clique or has more than t vertices.
std::uint64_t clique_extension_count(const Graph& g, std::span<const int> s,
                                     int t);

// Vertex-disjoint union of complete graphs with the given orders, laid out
// as consecutive blocks.
Graph construct_disjoint_cliques(const std::vector<int>& sizes);

// q disjoint copies of K_{max_degree+1} plus one K_rem, where
// n = q (max_degree+1) + rem, 0 <= rem <= max_degree.
Graph construct_gls(int n, int max_degree);

// Edge bitmask encoding: bit k of the mask is the k-th vertex pair (a,b),
// a < b, in lexicographic order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Every labeled simple graph on n vertices (n <= 8) exactly once, ordered by
// edge bitmask.
void for_each_graph(
    int n, const std::function<void(const Graph&, std::uint64_t)>& visit);
void for_each_graph_in_range(
    int n, std::uint64_t begin_mask, std::uint64_t end_mask,
    const std::function<void(const Graph&, std::uint64_t)>& visit);

// Erdos-Renyi G(n, edge_prob) sample, deterministic for a fixed seed.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// Text format: optional '#' comment lines, a data line "n m", then m lines
// "a b" with 0 <= a < b < n.  Writers emit edges in lexicographic order.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace cliquenorm
