#include "mayer/partitions.hpp"

#include <functional>
#include <numeric>

namespace mayer {

int PartitionVector::weight() const {
  int w = 0;
  for (int j = 0; j < length(); ++j) w += (j + 1) * m[j];
  return w;
}

int PartitionVector::norm() const { return std::accumulate(m.begin(), m.end(), 0); }

Integer partition_count(int k) {
  if (k < 0) throw ValidationError("partition_count needs k >= 0");
  // Coin-change recurrence over part sizes.
  std::vector<Integer> p(k + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int s = part; s <= k; ++s) p[s] += p[s - part];
  return p[k];
}

std::vector<PartitionVector> partition_vectors(int n) {
  if (n < 2) throw ValidationError("partition_vectors needs n >= 2");
  const int k = n - 1;
  std::vector<PartitionVector> out;
  PartitionVector cur{std::vector<int>(k, 0)};
  std::function<void(int, int)> fill = [&](int j, int rest) {
    if (j > k) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int c = rest / j; c >= 0; --c) {
      cur.m[j - 1] = c;
      fill(j + 1, rest - c * j);
    }
    cur.m[j - 1] = 0;
  };
  fill(1, k);
  return out;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0 || total < parts) return out;
  std::vector<int> cur(parts);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == parts - 1) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= rest - (parts - 1 - i); ++v) {
      cur[i] = v;
      rec(i + 1, rest - v);
    }
  };
  rec(0, total);
  return out;
}

}  // namespace mayer
