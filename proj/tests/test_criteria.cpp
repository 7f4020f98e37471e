#include <vector>

#include "doctest.h"
#include "mayer/criteria.hpp"
#include "mayer/trees.hpp"

using namespace mayer;

namespace {

EdgeMask mask(std::initializer_list<std::pair<int, int>> edges) {
  EdgeMask m = 0;
  for (auto [a, b] : edges) m |= EdgeMask{1} << Edge(a, b).index();
  return m;
}

BasicLinearCombination single(const MarkedGraph& g) {
  BasicLinearCombination out(g.order(), 1, "custom");
  out.add(1, g);
  return out;
}

}  // namespace

TEST_CASE("criteria on small examples") {
  const auto chain = single(MarkedGraph(3, mask({{1, 2}, {2, 3}})));
  CHECK(cr1(chain) == 1);
  CHECK(cr2(chain) == 2);
  CHECK(cr3(chain) == 0);

  // L: star plus Boltzmann edge; L1: the triangle. Both have Cr3 = 1.
  const auto l = single(MarkedGraph(3, mask({{1, 2}, {1, 3}}), mask({{2, 3}})));
  const auto l1 = single(MarkedGraph(3, all_pairs(3)));
  CHECK(cr3(l) == 1);
  CHECK(cr3(l1) == 1);
  const auto v = compare(cr3(l1), cr3(l), 3, true);
  CHECK(v.kind == VerdictKind::approximately_equal);
  CHECK(v.marginally_more_complex);
  CHECK(is_complete(l1));
  CHECK(is_complete(virial_block_blc(3)));
}

TEST_CASE("Ree-Hoover criteria") {
  const std::int64_t c1[] = {1, 1, 2, 5, 23};
  const std::int64_t c2[] = {1, 3, 12, 50, 345};
  const std::int64_t c3[] = {0, 1, 6, 30, 230};
  for (int n = 2; n <= 6; ++n) {
    const auto r = complexity_report(ree_hoover_blc(n));
    CHECK(r.cr1 == c1[n - 2]);
    CHECK(r.cr2 == c2[n - 2]);
    CHECK(r.cr3 == c3[n - 2]);
    CHECK(r.complete);
    CHECK(r.edge_identity_holds());
    const std::int64_t pairs = n * (n - 1) / 2;
    CHECK(r.cr2 == r.cr1 * pairs);
    CHECK(r.cr3 == r.cr1 * (pairs - n + 1));
  }
}

TEST_CASE("tree-sum criteria") {
  CHECK(cr1(tree_sum_bn_blc(8)) == 634);
  CHECK_FALSE(is_complete(tree_sum_bn_blc(4)));
  const auto b6 = complexity_report(tree_sum_bn_blc(6));
  CHECK(b6.cr3 == 183);
  CHECK(b6.edge_identity_holds());
  const auto rh6 = complexity_report(ree_hoover_blc(6));
  CHECK(compare(rh6.cr3, b6.cr3, 3).kind == VerdictKind::significantly_more_complex);
  CHECK(compare(b6.cr3, rh6.cr3, 3).kind == VerdictKind::significantly_simpler);
}

TEST_CASE("collection criteria") {
  std::vector<BasicLinearCombination> trees;
  for (int k = 2; k <= 8; ++k) trees.push_back(tree_sum_bn_blc(k));
  CHECK(cr_prime(trees, 1) == 857);
  std::int64_t sum2 = 0;
  for (const auto& blc : trees) sum2 += cr2(blc);
  CHECK(cr_prime(trees, 2) == sum2);
  const auto rh = ree_hoover_blc(5);
  CHECK(cr_prime(std::span(&rh, 1), 3) == cr3(rh));
  CHECK_THROWS_AS(cr_prime(trees, 4), ValidationError);
}
