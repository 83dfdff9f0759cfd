#pragma once

/*
 * Flats of the graphical matroid M(g), realized as vertex partitions all
 * of whose blocks induce connected subgraphs.  A flat carries its closed
 * edge set (the edges of g inside blocks) and its rank n - #blocks.
 *
 * Enumeration walks restricted-growth strings, i.e. set partitions of
 * {1..n} in lexicographic order of their canonical encoding, and keeps
 * the partitions with connected blocks.  This is Bell(n)-bounded and
 * never produces duplicates.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "zonoq/errors.hpp"
#include "zonoq/graph.hpp"

namespace zonoq {

struct Flat {
  VertexPartition partition;
  EdgeList edge_set;  // edges of the host graph lying inside blocks
  int rank = 0;
};

namespace detail {

// Adjacency of vertex v (1-based) as a bitmask over bits 0..n-1.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<size_t>(g.n) + 1, 0);
  for (const auto& [a, b] : g.edges) {
    adj[a] |= std::uint64_t(1) << (b - 1);
    adj[b] |= std::uint64_t(1) << (a - 1);
  }
  return adj;
}

// Is the induced subgraph on `mask` connected?  Empty masks count as
// connected.
inline bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  if (mask == 0) return true;
  std::uint64_t start = mask & (~mask + 1);
  std::uint64_t reached = start, frontier = start;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v + 1] & mask;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == mask;
}

}  // namespace detail

// Visits every flat of g exactly once, ordered lexicographically by the
// canonical partition encoding (restricted growth string).
template <class Visit>
void for_each_flat(const Graph& g, Visit&& visit) {
  const int n = g.n;
  if (n > 64) throw resource_error("for_each_flat: n > 64 unsupported");
  const auto adj = detail::adjacency_masks(g);
  std::vector<int> label(static_cast<size_t>(n), 0);
  std::vector<std::uint64_t> block_mask(static_cast<size_t>(n), 0);

  auto emit = [&](int num_blocks) {
    for (int k = 0; k < num_blocks; ++k)
      if (!detail::mask_connected(adj, block_mask[k])) return;
    Flat f;
    f.partition.blocks.resize(static_cast<size_t>(num_blocks));
    for (int v = 0; v < n; ++v) f.partition.blocks[label[v]].push_back(v + 1);
    for (const auto& e : g.edges)
      if (label[e.first - 1] == label[e.second - 1]) f.edge_set.push_back(e);
    f.rank = n - num_blocks;
    visit(std::as_const(f));
  };

  // Restricted growth: label[v] <= 1 + max(label[0..v-1]).
  auto recurse = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      emit(used);
      return;
    }
    for (int k = 0; k <= used && k < n; ++k) {
      label[v] = k;
      block_mask[k] |= std::uint64_t(1) << v;
      self(self, v + 1, std::max(used, k + 1));
      block_mask[k] &= ~(std::uint64_t(1) << v);
    }
  };
  recurse(recurse, 0, 0);
}

inline std::vector<Flat> enumerate_flats(const Graph& g) {
  std::vector<Flat> out;
  for_each_flat(g, [&](const Flat& f) { out.push_back(f); });
  return out;
}

// True iff every component of (V, edge_subset) is an induced subgraph of
// g, i.e. the subset is closed.
inline bool is_flat(const Graph& g, const EdgeList& edge_subset) {
  EdgeList subset;
  subset.reserve(edge_subset.size());
  for (auto [a, b] : edge_subset) {
    Edge e{std::min(a, b), std::max(a, b)};
    if (!std::binary_search(g.edges.begin(), g.edges.end(), e))
      throw validation_error("is_flat: edge " + detail::pair_str(a, b) + " not in graph");
    subset.push_back(e);
  }
  std::sort(subset.begin(), subset.end());
  detail::DisjointSets ds(g.n);
  for (const auto& [a, b] : subset) ds.unite(a, b);
  for (const auto& e : g.edges) {
    if (ds.find(e.first) != ds.find(e.second)) continue;
    if (!std::binary_search(subset.begin(), subset.end(), e)) return false;
  }
  return true;
}

// Flats of the given rank, in enumeration order.  Out-of-range ranks give
// an empty sequence.
inline std::vector<Flat> flats_of_rank(const Graph& g, int k) {
  std::vector<Flat> out;
  for_each_flat(g, [&](const Flat& f) {
    if (f.rank == k) out.push_back(f);
  });
  return out;
}

}  // namespace zonoq
