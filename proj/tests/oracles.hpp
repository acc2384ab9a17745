// Independent reference computations for tests. Nothing here calls into the
// library's graph or balance code; only the DualGraph accessors are used.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "abelstrata/curve_graph.hpp"
#include "abelstrata/multidegree.hpp"

namespace oracle {

using abelstrata::DualGraph;
using abelstrata::Edge;

inline std::vector<std::vector<std::size_t>> adjacency(const DualGraph& x, std::uint64_t vertices,
                                                       std::int64_t skip_edge = -1) {
  std::vector<std::vector<std::size_t>> adj(x.num_components());
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    if (static_cast<std::int64_t>(e) == skip_edge) continue;
    const auto& ed = x.edge(e);
    if (((vertices >> ed.u) & 1U) == 0 || ((vertices >> ed.v) & 1U) == 0) continue;
    adj[ed.u].push_back(ed.v);
    adj[ed.v].push_back(ed.u);
  }
  return adj;
}

// Number of connected pieces of the subgraph induced on `vertices`.
inline int pieces(const DualGraph& x, std::uint64_t vertices, std::int64_t skip_edge = -1) {
  const auto adj = adjacency(x, vertices, skip_edge);
  std::vector<bool> seen(x.num_components(), false);
  int count = 0;
  for (std::size_t s = 0; s < x.num_components(); ++s) {
    if (((vertices >> s) & 1U) == 0 || seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline std::uint64_t everything(const DualGraph& x) { return (std::uint64_t{1} << x.num_components()) - 1; }

inline int internal_edges(const DualGraph& x, std::uint64_t z) {
  int n = 0;
  for (const auto& e : x.edges()) n += ((z >> e.u) & 1U) && ((z >> e.v) & 1U);
  return n;
}

inline int boundary_edges(const DualGraph& x, std::uint64_t z) {
  int n = 0;
  for (const auto& e : x.edges()) n += (((z >> e.u) & 1U) != ((z >> e.v) & 1U));
  return n;
}

// Arithmetic genus of the induced subgraph: sum g_i + edges - vertices + pieces... for
// a connected subgraph this is the usual formula; for pieces it sums over them.
inline int genus_of(const DualGraph& x, std::uint64_t z) {
  int g = 0;
  int verts = 0;
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    if ((z >> v) & 1U) {
      g += x.component_genus(v);
      ++verts;
    }
  }
  return g + internal_edges(x, z) - verts + 1;
}

inline std::set<std::size_t> bridges(const DualGraph& x) {
  std::set<std::size_t> out;
  const int base = pieces(x, everything(x));
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    if (pieces(x, everything(x), static_cast<std::int64_t>(e)) > base) out.insert(e);
  }
  return out;
}

// Balance of a multidegree straight from the basic inequality, written as
// |d_Z - d w_Z / (2g-2)| <= delta_Z / 2 and multiplied out by 2(2g-2) > 0.
// Exceptional components are the genus-0, valence-2, loopless vertices.
struct Verdict {
  bool balanced = true;
  bool strict = true;
};

inline Verdict balance(const DualGraph& x, const std::vector<int>& deg) {
  const std::uint64_t all = everything(x);
  const long long g = genus_of(x, all);
  const long long d = [&] {
    long long t = 0;
    for (int v : deg) t += v;
    return t;
  }();
  std::vector<bool> exceptional(x.num_components(), false);
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    int val = 0;
    bool loop = false;
    for (const auto& e : x.edges()) {
      val += (e.u == v) + (e.v == v);
      loop = loop || (e.u == v && e.v == v);
    }
    exceptional[v] = x.component_genus(v) == 0 && val == 2 && !loop;
  }
  Verdict out;
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    if (exceptional[v] && deg[v] != 1) out.balanced = out.strict = false;
  }
  for (std::uint64_t z = 1; z <= all; ++z) {
    if (pieces(x, z) != 1) continue;
    long long dz = 0;
    for (std::size_t v = 0; v < x.num_components(); ++v) {
      if ((z >> v) & 1U) dz += deg[v];
    }
    const long long delta = boundary_edges(x, z);
    const long long wz = 2 * genus_of(x, z) - 2 + delta;
    const long long lhs = std::llabs(2 * dz * (2 * g - 2) - 2 * d * wz);
    const long long rhs = delta * (2 * g - 2);
    if (lhs > rhs) out.balanced = out.strict = false;
    bool plain_boundary = false;
    for (const auto& e : x.edges()) {
      if (((z >> e.u) & 1U) != ((z >> e.v) & 1U) && !exceptional[e.u] && !exceptional[e.v]) {
        plain_boundary = true;
      }
    }
    if (z != all && plain_boundary && lhs == rhs) out.strict = false;
  }
  return out;
}

// Connected graph: random spanning tree on gamma vertices, then extra edges and loops.
inline DualGraph random_connected_graph(std::mt19937_64& rng, std::size_t max_gamma, std::size_t max_extra,
                                        int max_genus) {
  std::uniform_int_distribution<std::size_t> gamma_dist(1, max_gamma);
  const std::size_t gamma = gamma_dist(rng);
  std::vector<int> genera(gamma);
  std::uniform_int_distribution<int> genus_dist(0, max_genus);
  for (auto& g : genera) g = genus_dist(rng);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < gamma; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  std::uniform_int_distribution<std::size_t> extra(0, max_extra);
  std::uniform_int_distribution<std::size_t> vert(0, gamma - 1);
  const std::size_t k = extra(rng);
  for (std::size_t i = 0; i < k; ++i) edges.push_back({vert(rng), vert(rng)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return DualGraph(std::move(genera), std::move(edges));
}

}  // namespace oracle
