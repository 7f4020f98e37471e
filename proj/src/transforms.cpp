#include "mayer/transforms.hpp"

namespace mayer {

namespace {

std::int64_t p(int k) { return partition_count(k).convert_to<std::int64_t>(); }

}  // namespace

std::int64_t bound_e_mu(int mu) { return 7 * p(mu - 1) * (mu - 1); }

std::int64_t bound_e_vector(int n) { return 7 * p(n - 1) * n * (n - 1) / 2; }

std::int64_t bound_combine(int n) { return 5 * n * p(n); }

std::int64_t bound_pipeline(int n) { return 7 * p(n - 1) * n * (n - 1) + 5 * n * p(n); }

std::int64_t bound_mayer(int n) {
  if (n <= 10) return 2440;
  std::int64_t total = 3;
  for (const auto& m : partition_vectors(n)) total += 5 * m.norm() + 3;
  return total;
}

}  // namespace mayer
