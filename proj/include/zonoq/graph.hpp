#pragma once

/*
 * Graph core: canonical simple graphs on vertex set {1..n}, vertex
 * partitions, and the structural operations everything else is built on
 * (components, induced subgraphs, contraction, wedge, Whitney twist,
 * family generators, seeded random graphs).
 *
 * All values are immutable after construction and every operation is a
 * pure function, so concurrent use needs no synchronization.
 */

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zonoq/errors.hpp"

namespace zonoq {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Simple undirected graph.  Vertices are labeled 1..n; edges are stored
// with i < j, sorted lexicographically, without duplicates.  Structural
// equality of two Graph values therefore means identical labeled graphs.
struct Graph {
  int n = 0;
  EdgeList edges;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;
};

// Partition of {1..n} into nonempty blocks; each block is sorted and the
// blocks are ordered by their minimum element.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

namespace detail {

inline std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Union-find over vertices 1..n.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

inline VertexPartition blocks_from_roots(int n, DisjointSets& ds) {
  std::vector<std::vector<int>> by_root(static_cast<size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) by_root[ds.find(v)].push_back(v);
  VertexPartition p;
  for (int v = 1; v <= n; ++v)
    if (!by_root[v].empty()) p.blocks.push_back(std::move(by_root[v]));
  return p;
}

}  // namespace detail

// Builds the canonical Graph: pairs are normalized to (min,max), duplicates
// merged, edges sorted.  Out-of-range endpoints and self-loops are rejected.
inline Graph make_graph(int n, const EdgeList& raw_edges) {
  if (n < 1) throw validation_error("make_graph: n must be positive, got " + std::to_string(n));
  EdgeList edges;
  edges.reserve(raw_edges.size());
  for (const auto& [a, b] : raw_edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw validation_error("make_graph: vertex out of range in edge " + detail::pair_str(a, b));
    if (a == b)
      throw validation_error("make_graph: self-loop " + detail::pair_str(a, b));
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

// Connected components as a vertex partition.
inline VertexPartition components(const Graph& g) {
  detail::DisjointSets ds(g.n);
  for (const auto& [a, b] : g.edges) ds.unite(a, b);
  return detail::blocks_from_roots(g.n, ds);
}

// Rank of the graphical matroid of g: n minus the number of components,
// equivalently the size of a spanning forest.
inline int graph_rank(const Graph& g) {
  return g.n - static_cast<int>(components(g).blocks.size());
}

// Induced subgraph on a vertex set, relabeled 1..|I| by increasing
// original label.
inline Graph induced(const Graph& g, std::vector<int> vertex_set) {
  if (vertex_set.empty()) throw validation_error("induced: empty vertex set");
  std::sort(vertex_set.begin(), vertex_set.end());
  vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());
  std::vector<int> new_label(static_cast<size_t>(g.n) + 1, 0);
  for (size_t i = 0; i < vertex_set.size(); ++i) {
    int v = vertex_set[i];
    if (v < 1 || v > g.n)
      throw validation_error("induced: vertex " + std::to_string(v) + " out of range");
    new_label[v] = static_cast<int>(i) + 1;
  }
  EdgeList edges;
  for (const auto& [a, b] : g.edges)
    if (new_label[a] && new_label[b]) edges.emplace_back(new_label[a], new_label[b]);
  return make_graph(static_cast<int>(vertex_set.size()), edges);
}

// Quotient of g by a partition whose blocks all induce connected
// subgraphs.  Block k (blocks ordered by minimum element) becomes vertex
// k+1; parallel edges collapse, loops cannot arise.
inline Graph contract(const Graph& g, const VertexPartition& p) {
  std::vector<int> block_of(static_cast<size_t>(g.n) + 1, 0);
  int seen = 0;
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    if (p.blocks[k].empty()) throw validation_error("contract: empty block");
    for (int v : p.blocks[k]) {
      if (v < 1 || v > g.n || block_of[v] != 0)
        throw validation_error("contract: blocks do not partition {1.." +
                               std::to_string(g.n) + "}");
      block_of[v] = static_cast<int>(k) + 1;
      ++seen;
    }
  }
  if (seen != g.n)
    throw validation_error("contract: blocks do not partition {1.." + std::to_string(g.n) + "}");
  for (const auto& block : p.blocks) {
    if (block.size() == 1) continue;
    detail::DisjointSets ds(g.n);
    for (const auto& [a, b] : g.edges)
      if (block_of[a] == block_of[b] && block_of[a] == block_of[block[0]]) ds.unite(a, b);
    int root = ds.find(block[0]);
    for (int v : block)
      if (ds.find(v) != root)
        throw validation_error("contract: block containing vertex " +
                               std::to_string(block[0]) + " is not connected");
  }
  EdgeList edges;
  for (const auto& [a, b] : g.edges)
    if (block_of[a] != block_of[b]) edges.emplace_back(block_of[a], block_of[b]);
  return make_graph(static_cast<int>(p.blocks.size()), edges);
}

// Glue g2 onto g1 identifying v2 with v1.  g1 keeps its labels; the other
// vertices of g2 are appended as n1+1, n1+2, ... in increasing order of
// their original label.
inline Graph wedge(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (v1 < 1 || v1 > g1.n)
    throw validation_error("wedge: vertex " + std::to_string(v1) + " out of range in first graph");
  if (v2 < 1 || v2 > g2.n)
    throw validation_error("wedge: vertex " + std::to_string(v2) + " out of range in second graph");
  std::vector<int> map2(static_cast<size_t>(g2.n) + 1, 0);
  map2[v2] = v1;
  int next = g1.n;
  for (int v = 1; v <= g2.n; ++v)
    if (v != v2) map2[v] = ++next;
  EdgeList edges = g1.edges;
  for (const auto& [a, b] : g2.edges) edges.emplace_back(map2[a], map2[b]);
  return make_graph(g1.n + g2.n - 1, edges);
}

// Whitney twist around the separating pair {u,v}: every edge from S to u
// is reattached to v and vice versa; edges inside S, inside the other
// side, and the edge {u,v} itself are untouched.  Requires that no edge
// joins S to V \ (S ∪ {u,v}).
inline Graph whitney_twist(const Graph& g, int u, int v, const std::vector<int>& side) {
  if (u == v) throw validation_error("whitney_twist: u and v must differ");
  if (u < 1 || u > g.n || v < 1 || v > g.n)
    throw validation_error("whitney_twist: pair " + detail::pair_str(u, v) + " out of range");
  std::vector<char> in_side(static_cast<size_t>(g.n) + 1, 0);
  for (int s : side) {
    if (s < 1 || s > g.n)
      throw validation_error("whitney_twist: side vertex " + std::to_string(s) + " out of range");
    if (s == u || s == v)
      throw validation_error("whitney_twist: side must avoid u and v");
    in_side[s] = 1;
  }
  for (const auto& [a, b] : g.edges) {
    bool sa = in_side[a], sb = in_side[b];
    if (sa == sb) continue;
    int outside = sa ? b : a;
    if (outside != u && outside != v)
      throw validation_error("whitney_twist: {u,v} does not separate the side, crossing edge " +
                             detail::pair_str(a, b));
  }
  EdgeList edges;
  edges.reserve(g.edges.size());
  for (auto [a, b] : g.edges) {
    if (in_side[a] != in_side[b]) {
      int& attach = in_side[a] ? b : a;
      attach = (attach == u) ? v : u;
    }
    edges.emplace_back(a, b);
  }
  return make_graph(g.n, edges);
}

enum class FamilyKind { complete, cycle, path, star };

// Canonical labeled member of a graph family.
inline Graph family(FamilyKind kind, int n) {
  if (n < 1) throw validation_error("family: n must be positive");
  EdgeList edges;
  switch (kind) {
    case FamilyKind::complete:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      break;
    case FamilyKind::cycle:
      if (n < 3) throw validation_error("family: cycle requires n >= 3");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, n);
      break;
    case FamilyKind::path:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::star:
      for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
      break;
  }
  return make_graph(n, edges);
}

// Seeded Erdos-Renyi style graph: each pair (i,j), visited in lexicographic
// order, is kept iff rng() % 100 < edge_pct.  Only raw engine output is
// used, so results are identical on every platform.
inline Graph random_graph(int n, int edge_pct, std::mt19937_64& rng) {
  EdgeList edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (static_cast<int>(rng() % 100) < edge_pct) edges.emplace_back(i, j);
  return make_graph(n, edges);
}

// Seeded uniform attachment tree: vertex v joins a uniformly chosen
// earlier vertex.
inline Graph random_tree(int n, std::mt19937_64& rng) {
  EdgeList edges;
  for (int v = 2; v <= n; ++v)
    edges.emplace_back(1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1)), v);
  return make_graph(n, edges);
}

inline Graph random_connected_graph(int n, int edge_pct, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, edge_pct, rng);
    if (components(g).blocks.size() == 1) return g;
  }
}

}  // namespace zonoq
