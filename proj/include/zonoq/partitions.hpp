#pragma once

#include <algorithm>
#include <vector>

#include "zonoq/bigint.hpp"
#include "zonoq/errors.hpp"

namespace zonoq {

// Integer partition: weakly decreasing sequence of positive parts.
using IntegerPartition = std::vector<int>;

// All partitions of n.  (The natural ordering used throughout the library
// is plain lexicographic on the part sequences, which puts 1^n first and
// (n) last.)
inline std::vector<IntegerPartition> partitions_of(int n) {
  std::vector<IntegerPartition> out;
  IntegerPartition current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

// All compositions of n (ordered sequences of positive parts).
inline std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      current.push_back(p);
      self(self, remaining - p);
      current.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

// Multiplicities (i_1,...,i_k) of the distinct part values of a partition.
inline std::vector<int> part_multiplicities(const IntegerPartition& lambda) {
  std::vector<int> mult;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i == 0 || lambda[i] != lambda[i - 1])
      mult.push_back(1);
    else
      ++mult.back();
  }
  return mult;
}

}  // namespace zonoq
