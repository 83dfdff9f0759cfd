#pragma once

/*
 * Chromatic polynomial by deletion-contraction with memoization, the
 * acyclic-orientation count a(g) = (-1)^n chi(g, -1), and an independent
 * brute-force orientation counter used as its oracle.
 *
 * The memo table is keyed by the canonical labeled graph; contracting the
 * many flats of a host graph keeps hitting the same minors, which is what
 * makes the flat-sum routes fast.  A ChromaticMemo is not synchronized:
 * share one per thread.
 */

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zonoq/errors.hpp"
#include "zonoq/graph.hpp"
#include "zonoq/polynomial.hpp"

namespace zonoq {

class ChromaticMemo {
 public:
  const IntPolynomial* find(const Graph& g) const {
    auto it = table_.find(g);
    return it == table_.end() ? nullptr : &it->second;
  }
  void store(const Graph& g, IntPolynomial p) { table_.emplace(g, std::move(p)); }
  size_t size() const { return table_.size(); }

 private:
  std::map<Graph, IntPolynomial> table_;
};

namespace detail {

inline IntPolynomial chromatic_connected(const Graph& g, ChromaticMemo& memo);

inline IntPolynomial chromatic_any(const Graph& g, ChromaticMemo& memo) {
  if (g.edges.empty()) return IntPolynomial::monomial(1, g.n, 'd');
  VertexPartition comps = components(g);
  if (comps.blocks.size() == 1) return chromatic_connected(g, memo);
  // Multiplicative over components.
  IntPolynomial result = IntPolynomial::constant(1, 'd');
  for (const auto& block : comps.blocks) {
    if (block.size() == 1) {
      result = result * IntPolynomial::variable('d');
    } else {
      result = result * chromatic_connected(induced(g, block), memo);
    }
  }
  return result;
}

inline IntPolynomial chromatic_connected(const Graph& g, ChromaticMemo& memo) {
  if (g.edges.empty()) return IntPolynomial::monomial(1, g.n, 'd');
  if (const IntPolynomial* hit = memo.find(g)) return *hit;
  // chi(g) = chi(g - e) - chi(g / e), pivot on the first edge.
  const Edge e = g.edges.front();
  Graph deleted{g.n, EdgeList(g.edges.begin() + 1, g.edges.end())};
  VertexPartition merge;
  merge.blocks.push_back({e.first, e.second});
  for (int v = 1; v <= g.n; ++v)
    if (v != e.first && v != e.second) merge.blocks.push_back({v});
  std::sort(merge.blocks.begin(), merge.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  IntPolynomial result = chromatic_any(deleted, memo) - chromatic_any(contract(g, merge), memo);
  memo.store(g, result);
  return result;
}

}  // namespace detail

// Chromatic polynomial of g in the color-count variable d; degree n, and
// evaluation at a nonnegative integer counts proper colorings.
inline IntPolynomial chromatic_poly(const Graph& g, ChromaticMemo& memo) {
  return detail::chromatic_any(g, memo);
}

inline IntPolynomial chromatic_poly(const Graph& g) {
  ChromaticMemo memo;
  return chromatic_poly(g, memo);
}

// Number of acyclic orientations, via a(g) = (-1)^n chi(g, -1).
inline Int acyclic_count(const Graph& g, ChromaticMemo& memo) {
  Int value = chromatic_poly(g, memo)(Int(-1));
  return (g.n % 2 != 0) ? Int(-value) : value;
}

inline Int acyclic_count(const Graph& g) {
  ChromaticMemo memo;
  return acyclic_count(g, memo);
}

// Independent oracle: enumerates all 2^|E| orientations and counts the
// ones without a directed cycle.  Kept deliberately separate from the
// chromatic route so the two can check each other.
inline Int acyclic_count_brute(const Graph& g) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 24)
    throw resource_error("acyclic_count_brute: |E| = " + std::to_string(m) +
                         " exceeds the 24-edge enumeration budget; use acyclic_count");
  Int count = 0;
  std::vector<std::vector<int>> incident(static_cast<size_t>(g.n) + 1);
  for (int k = 0; k < m; ++k) {
    incident[g.edges[k].first].push_back(k);
    incident[g.edges[k].second].push_back(k);
  }
  std::vector<int> indegree(static_cast<size_t>(g.n) + 1);
  std::vector<int> queue(static_cast<size_t>(g.n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    // Bit k set orients edge k from low to high endpoint.
    std::fill(indegree.begin(), indegree.end(), 0);
    for (int k = 0; k < m; ++k)
      ++indegree[(mask >> k) & 1 ? g.edges[k].second : g.edges[k].first];
    // Kahn peeling: acyclic iff all vertices get removed.
    int head = 0, tail = 0;
    for (int v = 1; v <= g.n; ++v)
      if (indegree[v] == 0) queue[tail++] = v;
    while (head < tail) {
      int v = queue[head++];
      for (int k : incident[v]) {
        bool forward = (mask >> k) & 1;
        if ((forward ? g.edges[k].first : g.edges[k].second) != v) continue;
        int w = forward ? g.edges[k].second : g.edges[k].first;
        if (--indegree[w] == 0) queue[tail++] = w;
      }
    }
    if (tail == g.n) ++count;
  }
  return count;
}

}  // namespace zonoq
