#pragma once

/*
 * The q-analog of the chromatic symmetric function in the monomial basis,
 * and its principal specialization chi_q(g, d).
 *
 * For a composition alpha = (a_1,...,a_k) of n, the monomial coefficient
 * is the ordered-set-partition enumerator
 *
 *     zeta_q_alpha(g, alpha) = sum over (I_1,...,I_k), |I_j| = a_j,
 *                              of q^(rk(g|I_1) + ... + rk(g|I_k)),
 *
 * where rk is the graphical matroid rank |I| - #components(g|I).  The
 * value depends only on the multiset of part sizes, which is what makes
 * the function symmetric; psi_q exploits that by enumerating unordered
 * set partitions of each type and scaling by the number of orderings of
 * equal-size blocks, while zeta_q_alpha itself walks the ordered blocks
 * literally so the two routes stay independent.
 *
 * chi_q is kept in the binomial basis (j -> coeff_j(q), standing for
 * coeff_j(q) * C(d, j)) so that all arithmetic is exact over the
 * integers; the d-power expansion exists for display.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "zonoq/bigint.hpp"
#include "zonoq/errors.hpp"
#include "zonoq/flats.hpp"
#include "zonoq/graph.hpp"
#include "zonoq/partitions.hpp"
#include "zonoq/polynomial.hpp"

namespace zonoq {

// Monomial-basis expansion of psi_q: partition lambda |- n  ->  coefficient
// polynomial in q.  Map order (lexicographic on part sequences) is the
// display order, 1^n first.
struct MonomialExpansion {
  int weight = 0;
  std::map<IntegerPartition, IntPolynomial> terms;
};

// A polynomial in d written in the binomial basis: sum_j coeff_j(q) * C(d, j).
struct BinomialFormPolynomial {
  int weight = 0;  // largest possible block count
  std::map<int, IntPolynomial> terms;
};

namespace detail {

// rank of the induced subgraph on every vertex subset, indexed by bitmask.
inline std::vector<int> subset_rank_table(const Graph& g) {
  const int n = g.n;
  if (n > 20)
    throw resource_error("subset_rank_table: n = " + std::to_string(n) +
                         " needs a 2^n table; refusing beyond n = 20");
  const auto adj = adjacency_masks(g);
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  std::vector<int> rank(static_cast<size_t>(full) + 1, 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    // components(mask) = components(mask minus lowest vertex) adjusted:
    // recompute directly; masks are small (n <= ~20 in practice).
    std::uint64_t rest = mask;
    int comps = 0;
    while (rest) {
      std::uint64_t seed = rest & (~rest + 1);
      std::uint64_t reached = seed, frontier = seed;
      while (frontier) {
        std::uint64_t next = 0, f = frontier;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= adj[v + 1] & mask;
        }
        frontier = next & ~reached;
        reached |= next;
      }
      rest &= ~reached;
      ++comps;
    }
    rank[mask] = std::popcount(mask) - comps;
  }
  return rank;
}

}  // namespace detail

// Literal enumeration of zeta_q over ordered set partitions of type alpha.
inline IntPolynomial zeta_q_alpha(const Graph& g, const std::vector<int>& alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a < 1) throw validation_error("zeta_q_alpha: composition parts must be positive");
    total += a;
  }
  if (total != g.n)
    throw validation_error("zeta_q_alpha: composition weight " + std::to_string(total) +
                           " does not match n = " + std::to_string(g.n));
  const auto rank = detail::subset_rank_table(g);
  const std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
  std::vector<Int> coeff_by_exponent(static_cast<size_t>(g.n), 0);

  // Choose block k as a subset of the remaining vertices of size alpha[k].
  auto choose = [&](auto&& self, size_t k, std::uint64_t remaining, int exponent) -> void {
    if (k == alpha.size()) {
      coeff_by_exponent[static_cast<size_t>(exponent)] += 1;
      return;
    }
    const int size = alpha[k];
    std::uint64_t block = 0;
    auto pick = [&](auto&& pick_self, int picked, int lowest_allowed) -> void {
      if (picked == size) {
        self(self, k + 1, remaining & ~block, exponent + rank[block]);
        return;
      }
      for (int v = lowest_allowed; v < g.n; ++v) {
        std::uint64_t bit = std::uint64_t(1) << v;
        if (!(remaining & bit)) continue;
        block |= bit;
        pick_self(pick_self, picked + 1, v + 1);
        block &= ~bit;
      }
    };
    pick(pick, 0, 0);
  };
  choose(choose, 0, full, 0);
  return IntPolynomial(std::move(coeff_by_exponent), 'q');
}

// psi_q(g) in the monomial basis.  Enumeration budget guards the Bell-number
// growth of the sweep.
inline MonomialExpansion psi_q(const Graph& g, int budget = 10) {
  if (g.n > budget)
    throw resource_error("psi_q: n = " + std::to_string(g.n) +
                         " exceeds the enumeration budget " + std::to_string(budget));
  const auto rank = detail::subset_rank_table(g);
  const std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
  MonomialExpansion out;
  out.weight = g.n;

  for (const IntegerPartition& lambda : partitions_of(g.n)) {
    // Parts are stored weakly decreasing: lambda is its own sorted composition.
    const std::vector<int>& sizes = lambda;
    std::vector<Int> coeff_by_exponent(static_cast<size_t>(g.n), 0);

    // Unordered set partitions of type lambda: within a run of equal-size
    // blocks the block minima increase, so each unordered choice appears
    // exactly once; the q-exponent is order-independent.
    auto place = [&](auto&& self, size_t k, std::uint64_t remaining, int prev_min,
                     int exponent) -> void {
      if (k == sizes.size()) {
        coeff_by_exponent[static_cast<size_t>(exponent)] += 1;
        return;
      }
      const int size = sizes[k];
      const bool same_run = k > 0 && sizes[k] == sizes[k - 1];
      // The block's minimum element anchors it.
      for (int m = same_run ? prev_min + 1 : 0; m < g.n; ++m) {
        std::uint64_t anchor = std::uint64_t(1) << m;
        if (!(remaining & anchor)) continue;
        std::uint64_t block = anchor;
        auto pick = [&](auto&& pick_self, int picked, int lowest) -> void {
          if (picked == size) {
            self(self, k + 1, remaining & ~block, m, exponent + rank[block]);
            return;
          }
          for (int v = lowest; v < g.n; ++v) {
            std::uint64_t bit = std::uint64_t(1) << v;
            if (!(remaining & bit)) continue;
            block |= bit;
            pick_self(pick_self, picked + 1, v + 1);
            block &= ~bit;
          }
        };
        pick(pick, 1, m + 1);
      }
    };
    place(place, 0, full, -1, 0);

    // Orderings of equal-size blocks.
    Int orderings = 1;
    for (int mult : part_multiplicities(lambda)) orderings *= factorial(mult);
    IntPolynomial coeff(std::move(coeff_by_exponent), 'q');
    coeff *= orderings;
    out.terms.emplace(lambda, std::move(coeff));
  }
  return out;
}

// Principal specialization of a single monomial basis element:
// ps(m_lambda)(d) = multiplier * C(d, blocks) with blocks = #parts and
// multiplier = (i_1+...+i_k)! / (i_1! ... i_k!) over part multiplicities.
struct PsMonomialTerm {
  Int multiplier;
  int blocks;
};

inline PsMonomialTerm ps_monomial(const IntegerPartition& lambda) {
  const std::vector<int> mult = part_multiplicities(lambda);
  const int blocks = std::accumulate(mult.begin(), mult.end(), 0);
  Int m = factorial(blocks);
  for (int i : mult) m /= factorial(i);
  return {std::move(m), blocks};
}

inline BinomialFormPolynomial chi_q(const Graph& g, int budget = 10) {
  const MonomialExpansion psi = psi_q(g, budget);
  BinomialFormPolynomial out;
  out.weight = g.n;
  for (const auto& [lambda, coeff] : psi.terms) {
    if (coeff.is_zero()) continue;
    const PsMonomialTerm term = ps_monomial(lambda);
    auto [it, inserted] = out.terms.emplace(term.blocks, coeff * term.multiplier);
    if (!inserted) it->second += coeff * term.multiplier;
  }
  return out;
}

// Exact evaluation with q -> q_sub and d -> d0.  Binomials at negative
// integers follow from the falling-factorial definition, so C(-1, j) = (-1)^j.
inline IntPolynomial chi_q_eval(const BinomialFormPolynomial& chi, const IntPolynomial& q_sub,
                                const Int& d0) {
  IntPolynomial result;
  for (const auto& [blocks, coeff] : chi.terms)
    result += coeff.compose(q_sub) * binomial(d0, blocks);
  return result.with_var('q');
}

inline IntPolynomial chi_q_eval(const Graph& g, const IntPolynomial& q_sub, const Int& d0,
                                int budget = 10) {
  return chi_q_eval(chi_q(g, budget), q_sub, d0);
}

// d-power expansion of a binomial-form polynomial: entry k is the
// q-coefficient of d^k.  Exact; the chromatic-type functions this library
// produces always expand integrally, anything else throws.
inline std::vector<IntPolynomial> d_power_expansion(const BinomialFormPolynomial& chi) {
  int max_j = 0;
  for (const auto& [blocks, coeff] : chi.terms) max_j = std::max(max_j, blocks);
  const Int scale = factorial(max_j);
  // scale * sum_j coeff_j(q) * C(d,j) accumulated as integer q-polynomials
  // per power of d, using C(d,j) = d(d-1)...(d-j+1)/j!.
  std::vector<IntPolynomial> acc(static_cast<size_t>(max_j) + 1);
  for (const auto& [blocks, coeff] : chi.terms) {
    std::vector<Int> falling{1};  // coefficients of d(d-1)...(d-i+1), ascending
    for (int i = 0; i < blocks; ++i) {
      falling.insert(falling.begin(), 0);
      for (size_t k = 0; k + 1 < falling.size(); ++k) falling[k] -= Int(i) * falling[k + 1];
    }
    const Int factor = scale / factorial(blocks);
    for (size_t k = 0; k < falling.size(); ++k)
      acc[k] += coeff * (falling[k] * factor);
  }
  for (auto& poly : acc) {
    std::vector<Int> divided;
    divided.reserve(poly.coeffs().size());
    for (const Int& c : poly.coeffs()) {
      if (c % scale != 0)
        throw std::logic_error("d_power_expansion: non-integral expansion");
      divided.push_back(c / scale);
    }
    poly = IntPolynomial(std::move(divided), 'q');
  }
  return acc;
}

inline std::vector<IntPolynomial> chi_q_d_expansion(const Graph& g, int budget = 10) {
  return d_power_expansion(chi_q(g, budget));
}

}  // namespace zonoq
