#include <algorithm>
#include <set>

#include "doctest.h"
#include "mayer/blc.hpp"
#include "mayer/trees.hpp"
#include "oracles.hpp"

using namespace mayer;

namespace {

EdgeMask mask(std::initializer_list<std::pair<int, int>> edges) {
  EdgeMask m = 0;
  for (auto [a, b] : edges) m |= EdgeMask{1} << Edge(a, b).index();
  return m;
}

// Re-indexes a mask into the oracle's i-major pair order.
unsigned long long oracle_bits(int n, EdgeMask m) {
  const auto pairs = oracle::all_pairs(n);
  unsigned long long out = 0;
  for (const auto& e : edges_of(m)) {
    const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(e.u, e.v));
    out |= 1ULL << (it - pairs.begin());
  }
  return out;
}

Rational inv_fact(int n) { return Rational(Integer(1), factorial(n)); }

}  // namespace

TEST_CASE("connected and block sums") {
  CHECK(mayer_bn_blc(2).length() == 1);
  CHECK(mayer_bn_blc(3).length() == 4);
  for (int n = 2; n <= 5; ++n) {
    CHECK(static_cast<long long>(mayer_bn_blc(n).length()) == oracle::count_connected(n));
    CHECK(static_cast<long long>(virial_block_blc(n).length()) == oracle::count_biconnected(n));
  }
  CHECK(mayer_bn_blc(4).length() == 38);
  CHECK(virial_block_blc(3).length() == 1);
  CHECK(virial_block_blc(4).length() == 10);
  CHECK(mayer_bn_blc(4).prefactor() == inv_fact(4));
  CHECK(virial_block_blc(4).prefactor() == Rational(-3, 24));
  const auto connected4 = mayer_bn_blc(4);
  for (const auto& t : connected4.terms()) {
    CHECK(t.coefficient == 1);
    CHECK(t.graph.boltzmann() == 0);
  }
  CHECK_THROWS_AS(mayer_bn_blc(7), BudgetError);
  CHECK_THROWS_AS(virial_block_blc(1), BudgetError);
}

TEST_CASE("tree sums") {
  const auto b3 = tree_sum_bn_blc(3);
  REQUIRE(b3.length() == 2);
  std::set<std::pair<std::string, std::string>> terms;
  for (const auto& t : b3.terms()) terms.emplace(to_string(t.coefficient), format_graph(t.graph));
  CHECK(terms == std::set<std::pair<std::string, std::string>>{
                     {"1", "n=3; f=1-2,1-3; ft=2-3"}, {"2", "n=3; f=1-2,2-3; ft="}});
  CHECK(b3.prefactor() == inv_fact(3));

  CHECK(tree_sum_bn_blc(7).length() == 157);
  CHECK(tree_sum_an_blc(6).length() == 15);
  const auto a3 = tree_sum_an_blc(3);
  REQUIRE(a3.length() == 1);
  CHECK(format_graph(a3.terms()[0].graph) == "n=3; f=1-2,1-3; ft=2-3");
  const auto a2 = tree_sum_an_blc(2);
  const auto b2 = tree_sum_bn_blc(2);
  REQUIRE(a2.length() == 1);
  CHECK(a2.terms()[0].graph == b2.terms()[0].graph);
  CHECK(a2.terms()[0].coefficient == b2.terms()[0].coefficient);
  CHECK(a2.prefactor() == b2.prefactor());

  for (int n = 3; n <= 7; ++n) {
    const auto blc = tree_sum_bn_blc(n);
    CHECK(Integer(blc.length()) == count_tr(n));
    int complete = 0;
    for (const auto& t : blc.terms()) {
      if (!t.graph.is_complete()) continue;
      ++complete;
      EdgeMask star = 0;
      for (int v = 2; v <= n; ++v) star |= EdgeMask{1} << Edge(1, v).index();
      CHECK(t.graph.mayer() == star);
    }
    CHECK(complete == 1);
  }
  CHECK(tree_sum_all_blc(4).length() == 16);
  CHECK_THROWS_AS(tree_sum_bn_blc(10), BudgetError);
}

TEST_CASE("Ree-Hoover weights") {
  for (int n = 2; n <= 5; ++n) {
    const auto c = ree_hoover_coefficients(n);
    for (EdgeMask s = 0; s < c.size(); ++s)
      REQUIRE(c[s] == oracle::ree_hoover_weight(n, oracle_bits(n, s)));
  }
  // Triangle only at n=3; paths have zero weight.
  const auto c3 = ree_hoover_coefficients(3);
  CHECK(c3[all_pairs(3)] == 1);
  CHECK(c3[mask({{1, 2}, {2, 3}})] == 0);
  const auto classes4 = ree_hoover_classes(4);
  REQUIRE(classes4.size() == 2);
  std::int64_t members = 0;
  for (const auto& cls : classes4) members += cls.members;
  CHECK(members == static_cast<std::int64_t>(ree_hoover_labeled_blc(4).length()));
}

TEST_CASE("Ree-Hoover distinct diagram counts") {
  const std::size_t expected[] = {1, 1, 2, 5, 23};
  for (int n = 2; n <= 6; ++n) {
    const auto blc = ree_hoover_blc(n);
    CHECK(blc.length() == expected[n - 2]);
    CHECK(blc.prefactor() == Rational(Integer(-(n - 1)), factorial(n)));
    for (const auto& t : blc.terms()) CHECK(t.graph.is_complete());
  }
  const auto three = ree_hoover_blc(3);
  CHECK(format_graph(three.terms()[0].graph) == "n=3; f=1-2,1-3,2-3; ft=");
  CHECK_THROWS_AS(ree_hoover_coefficients(8), BudgetError);
}

TEST_CASE("frame sum ingestion") {
  const auto rec = parse_frame_sum("# triangle\nn=3; s=1-2,2-3,1-3; ad=\n");
  CHECK(rec.order == 3);
  const auto blc = load_frame_sum(rec);
  CHECK(blc.length() == 1);
  CHECK(blc.prefactor() == Rational(-2, 6));
  CHECK(format_frame_sum(rec) == "n=3; s=1-2,1-3,2-3; ad=\n");

  const auto four = parse_frame_sum("n=4; s=1-2,2-3,3-4,1-4; ad=1-3\nn=4; s=1-2,2-3,3-4,1-4,2-4\n");
  CHECK(load_frame_sum(four).length() == 2);

  CHECK_THROWS_AS(load_frame_sum(parse_frame_sum("n=3; s=1-2,2-3")), ValidationError);
  CHECK_THROWS_AS(load_frame_sum(parse_frame_sum("n=3; s=1-2,2-3,1-3; ad=1-2")), ValidationError);
  CHECK_THROWS_AS(load_frame_sum(parse_frame_sum("n=4; s=1-2,2-3,1-3")), ValidationError);
  CHECK_THROWS_AS(parse_frame_sum("n=3; s=1-2,2-3,1-3\nn=4; s=1-2,2-3,3-4,1-4"), ValidationError);
  CHECK_THROWS_AS(parse_frame_sum("n=3; t=1-2"), ValidationError);
  CHECK_THROWS_AS(parse_frame_sum(""), ValidationError);
}

TEST_CASE("linear combination invariants and JSON round trip") {
  BasicLinearCombination blc(3, Rational(1, 6), "custom");
  CHECK_THROWS_AS(blc.add(1, MarkedGraph(4, all_pairs(4))), ValidationError);
  CHECK_THROWS_AS(blc.add(1, MarkedGraph(3, mask({{1, 2}}), mask({{2, 3}}))), ValidationError);
  blc.add(Rational(-3, 4), MarkedGraph(3, mask({{1, 2}, {1, 3}}), mask({{2, 3}})));
  const std::string text = blc_to_json(blc);
  CHECK(text ==
        R"({"order":3,"prefactor":{"den":"6","num":"1"},"provenance":"custom","terms":[{"coeff":{"den":"4","num":"-3"},"f":["1-2","1-3"],"ft":["2-3"]}]})");
  const auto back = blc_from_json(text);
  CHECK(back.order() == 3);
  CHECK(back.prefactor() == Rational(1, 6));
  REQUIRE(back.length() == 1);
  CHECK(back.terms()[0].coefficient == Rational(-3, 4));
  CHECK(back.terms()[0].graph == blc.terms()[0].graph);

  const auto rh = ree_hoover_blc(5);
  CHECK(blc_to_json(blc_from_json(blc_to_json(rh))) == blc_to_json(rh));
  CHECK_THROWS_AS(blc_from_json("{\"order\":3}"), ValidationError);
  CHECK_THROWS_AS(blc_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(
      blc_from_json(R"({"order":3,"prefactor":{"num":1,"den":0},"terms":[]})"), ValidationError);
}
