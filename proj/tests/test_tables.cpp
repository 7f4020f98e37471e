#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mayer/criteria.hpp"
#include "mayer/tables.hpp"

using namespace mayer;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const TableCell& cell(const ComplexityTable& t, const std::string& key, int n) {
  for (const auto& row : t.rows)
    if (row.key == key)
      for (const auto& c : row.cells)
        if (c.n == n) return c;
  FAIL("no cell " << key << " n=" << n);
  throw;
}

}  // namespace

TEST_CASE("markdown output matches the golden file") {
  std::string all;
  for (int i = 1; i <= 6; ++i) {
    if (i > 1) all += "\n";
    all += render_markdown(build_table(i));
  }
  CHECK(all == golden("tables.md"));
}

TEST_CASE("reference rows reproduced exactly") {
  const auto t1 = build_table(1);
  for (int n = 2; n <= 10; ++n) {
    CHECK(cell(t1, "T1.TR", n).status == CellStatus::match);
    CHECK(cell(t1, "T1.TR0", n).status == CellStatus::match);
  }
  for (int n = 2; n <= 7; ++n) CHECK(cell(t1, "T1.RH", n).status == CellStatus::match);
  CHECK(cell(t1, "T1.RH", 8).status == CellStatus::reference_only);
  CHECK(*cell(t1, "T1.RH", 10).reference == 4980756);
  CHECK(cell(t1, "T1.F", 4).status == CellStatus::reference_only);
  CHECK(cell(t1, "T1.F", 7).status == CellStatus::not_listed);

  const auto t3 = build_table(3);
  CHECK(*cell(t3, "T3.RH", 6).recomputed == 230);
  CHECK(cell(build_table(6), "T6.RH", 7).status == CellStatus::match);
}

TEST_CASE("inconsistencies are flagged, not corrected") {
  const auto t2 = build_table(2);
  CHECK(*cell(t2, "T2.TR", 4).reference == 23);
  CHECK(*cell(t2, "T2.TR", 4).recomputed == 22);
  CHECK(cell(t2, "T2.TR", 4).status == CellStatus::mismatch);
  CHECK(t2.flags() == std::vector<std::string>{"T2.TR n=4: recomputed 22, reference 23 (mismatch)"});

  const auto t3 = build_table(3);
  CHECK(cell(t3, "T3.TR", 4).status == CellStatus::mismatch);
  CHECK(cell(t3, "T3.TR0", 5).status == CellStatus::mismatch);

  const auto t4 = build_table(4);
  CHECK(*cell(t4, "T4.TR", 10).recomputed == 17756);
  CHECK(*cell(t4, "T4.TR", 8).recomputed == 857);
  CHECK(cell(t4, "T4.TR", 10).status == CellStatus::mismatch);

  // The printed collection rows are checked against their own single rows too.
  const auto t5 = build_table(5);
  CHECK(cell(t5, "T5.TR", 4).status == CellStatus::match);
  CHECK(*cell(t5, "T5.TR", 4).reference_prefix == 29);
  CHECK(cell(t5, "T5.TR", 4).reference_inconsistent());
  CHECK(!cell(t5, "T5.TR0", 6).reference_inconsistent());
  CHECK(t5.flags().size() == 3);
  CHECK(cell(t4, "T4.TR", 10).reference_inconsistent());

  const auto t6 = build_table(6);
  const auto& bound = cell(t6, "T6.TR", 7);
  CHECK(bound.reference_is_bound);
  CHECK(bound.status == CellStatus::within_bound);
  CHECK(cell(t6, "T6.TR", 4).status == CellStatus::mismatch);
  CHECK(cell(t6, "T6.TR0", 7).status == CellStatus::mismatch);
  CHECK(!bound.reference_prefix);
  CHECK(cell(t6, "T6.TR0", 5).reference_inconsistent());
  CHECK(t6.flags().size() == 8);
}

TEST_CASE("collection rows are prefix sums of the single rows") {
  const auto t2 = build_table(2);
  const auto t5 = build_table(5);
  for (const char* rep : {"TR", "TR0"}) {
    std::int64_t sum = 0;
    for (int n = 2; n <= 6; ++n) {
      sum += *cell(t2, std::string("T2.") + rep, n).recomputed;
      CHECK(*cell(t5, std::string("T5.") + rep, n).recomputed == sum);
    }
  }
}

TEST_CASE("ingested frame sums fill the L_F row") {
  FrameSums frames;
  frames.emplace(2, load_frame_sum(parse_frame_sum("n=2; s=1-2; ad=")));
  frames.emplace(3, load_frame_sum(parse_frame_sum("n=3; s=1-2,1-3,2-3; ad=")));
  const auto t1 = build_table(1, frames);
  CHECK(cell(t1, "T1.F", 2).status == CellStatus::match);
  CHECK(cell(t1, "T1.F", 3).status == CellStatus::match);
  CHECK(cell(t1, "T1.F", 4).status == CellStatus::reference_only);
  CHECK(cell(build_table(3, frames), "T3.F", 3).status == CellStatus::match);
  FrameSums wrong;
  wrong.emplace(4, load_frame_sum(parse_frame_sum("n=3; s=1-2,1-3,2-3; ad=")));
  CHECK_THROWS_AS(build_table(1, wrong), ValidationError);
  CHECK_THROWS_AS(build_table(7), ValidationError);
}

TEST_CASE("csv and json renderings carry the same cells") {
  const auto t = build_table(6);
  const auto csv = render_csv(t);
  CHECK(csv.find("6,T6.TR,\"Cr'3(L_TR(2..n))\",7,<2247,1168,within-bound,\n") != std::string::npos);
  const auto j = table_to_json(t);
  const auto again = nlohmann::json::parse(j.dump());
  CHECK(again == j);
  CHECK(again["rows"][0]["cells"][5]["recomputed"] == 1168);
  CHECK(again["flags"].size() == 8);
  CHECK(again["rows"][1]["cells"][3]["reference_prefix"] == 47);
  CHECK(again["rows"][2]["cells"][3]["reference"].is_null());
}
