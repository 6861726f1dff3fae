#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's algorithms: plain subset scans and direct distribution
// enumeration, no bitsets, no shared code paths.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "cliquenorm/combinatorics.hpp"
#include "cliquenorm/entropy.hpp"
#include "cliquenorm/graph.hpp"
#include "cliquenorm/hypergraph.hpp"

namespace oracle {

// k_t by scanning every t-subset of the vertex set.
inline std::uint64_t count_cliques(const cliquenorm::Graph& g, int t) {
  std::uint64_t count = 0;
  cliquenorm::for_each_combination(
      g.vertex_count(), t, [&](std::span<const int> sel) {
        for (std::size_t a = 0; a < sel.size(); ++a)
          for (std::size_t b = a + 1; b < sel.size(); ++b)
            if (!g.has_edge(sel[a], sel[b])) return;
        ++count;
      });
  return count;
}

// k^r_t by scanning every t-subset and every r-subset inside it.
inline std::uint64_t count_hypercliques(const cliquenorm::Hypergraph& h,
                                        int t) {
  const int r = h.uniformity();
  std::uint64_t count = 0;
  cliquenorm::for_each_combination(
      h.vertex_count(), t, [&](std::span<const int> sel) {
        bool complete = true;
        cliquenorm::for_each_combination(t, r, [&](std::span<const int> idx) {
          if (!complete) return;
          std::vector<int> edge;
          edge.reserve(idx.size());
          for (int i : idx) edge.push_back(sel[i]);
          if (!h.has_edge(edge)) complete = false;
        });
        if (complete) ++count;
      });
  return count;
}

// Prefix entropies of the "uniform member, then uniform ordering" process,
// computed by enumerating every ordered tuple and tallying the prefix
// distribution directly.
inline std::vector<double> entropy_prefixes(
    const cliquenorm::SetFamily& family) {
  const int d = family.member_size;
  std::vector<double> h(static_cast<std::size_t>(d), 0.0);
  for (int k = 1; k <= d; ++k) {
    std::map<std::vector<int>, double> prob;  // over ordered k-prefixes
    for (const auto& member : family.members) {
      // every ordered k-arrangement of the member is a prefix with weight
      // (d-k)!/d! within the member, and members are uniform
      std::vector<int> arrangement(static_cast<std::size_t>(k));
      std::vector<char> used(member.size(), 0);
      const double weight =
          1.0 / (static_cast<double>(family.members.size()) *
                 static_cast<double>(cliquenorm::factorial_u64(d) /
                                     cliquenorm::factorial_u64(d - k)));
      // recursive arrangement enumeration
      auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
          prob[arrangement] += weight;
          return;
        }
        for (std::size_t i = 0; i < member.size(); ++i) {
          if (used[i]) continue;
          used[i] = 1;
          arrangement[static_cast<std::size_t>(depth)] = member[i];
          self(self, depth + 1);
          used[i] = 0;
        }
      };
      rec(rec, 0);
    }
    double entropy = 0.0;
    for (const auto& [prefix, pr] : prob) entropy -= pr * std::log2(pr);
    h[static_cast<std::size_t>(k - 1)] = entropy;
  }
  return h;
}

inline cliquenorm::Graph petersen() {
  cliquenorm::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);            // outer cycle
    g.add_edge(i, i + 5);                  // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);    // inner pentagram
  }
  return g;
}

}  // namespace oracle
