#pragma once

#include <vector>

#include "mayer/common.hpp"

namespace mayer {

/// Multiplicity vector m = (m_1,..,m_k) with sum_j j*m_j = k.
struct PartitionVector {
  std::vector<int> m;

  int length() const { return static_cast<int>(m.size()); }
  int weight() const;  // sum_j j*m_j
  int norm() const;    // ||m|| = sum_j m_j
};

/// Number of unordered partitions p(k); p(0) = 1.
Integer partition_count(int k);

/// The set M(n): all (n-1)-vectors with sum_j j*m_j = n-1, in
/// lexicographically decreasing order of m.
std::vector<PartitionVector> partition_vectors(int n);

/// Compositions of `total` into exactly `parts` positive integers.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace mayer
