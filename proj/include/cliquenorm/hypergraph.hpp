#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace cliquenorm {

// r-uniform hypergraph on vertices 0..n-1.  Edges are stored as sorted
// vertex vectors; a hash index backs membership tests.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, int r);

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Rejects wrong arity, out-of-range or repeated vertices, and duplicate
  // edges.
  void add_edge(std::vector<int> vertices);
  bool has_edge(const std::vector<int>& sorted_vertices) const;
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  std::vector<int> positive_degree_vertices() const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  int n_ = 0;
  int r_ = 2;
  std::vector<std::vector<int>> edges_;
  std::unordered_set<std::vector<int>, VecHash> index_;
};

// deg(S): number of (r-j)-sets T disjoint from S with S u T an edge.
// Requires |S| = j < r.
std::uint64_t subset_degree(const Hypergraph& h, std::span<const int> s);

// sum over j-subsets S of deg(S)^p, accumulated over the subsets of
// positive degree in colexicographic order.
double subset_degree_power_sum(const Hypergraph& h, int j, double p);

// (j,p)-norm: subset_degree_power_sum^(1/p).  Rejects p <= 0 or j out of
// [1, r-1].
double hyper_norm(const Hypergraph& h, int j, double p);

// Number of t-vertex sets all of whose r-subsets are edges.  Requires
// t >= r.
std::uint64_t count_hypercliques(const Hypergraph& h, int t);
std::vector<std::vector<int>> list_hypercliques(const Hypergraph& h, int t);

// Complete r-uniform hypergraph on u vertices, and m vertex-disjoint copies
// laid out as consecutive blocks.
Hypergraph construct_complete_hyper(int u, int r);
Hypergraph construct_disjoint_complete_hyper(int m, int u, int r);

// Edge bitmask encoding: bit k is the k-th r-subset of {0..n-1} in
// lexicographic order.  Enumeration requires C(n,r) <= 24.
Hypergraph hypergraph_from_edge_mask(int n, int r, std::uint64_t mask);
void for_each_hypergraph(
    int n, int r,
    const std::function<void(const Hypergraph&, std::uint64_t)>& visit);
void for_each_hypergraph_in_range(
    int n, int r, std::uint64_t begin_mask, std::uint64_t end_mask,
    const std::function<void(const Hypergraph&, std::uint64_t)>& visit);

// Text format: optional '#' comment lines, a data line "n m r", then m lines
// of r strictly increasing vertex indices.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

}  // namespace cliquenorm
