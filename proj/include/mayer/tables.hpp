#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mayer/blc.hpp"

namespace mayer {

/// How a cell's recomputed value relates to the shipped reference value.
enum class CellStatus {
  match,
  mismatch,
  within_bound,    // reference is an upper bound "< v" and the recomputation respects it
  bound_violated,
  reference_only,  // outside the recomputation budget or not reproducible here
  not_listed,      // no reference value for this order
};

std::string to_string(CellStatus status);

struct TableCell {
  int n = 0;
  std::optional<std::int64_t> reference;
  bool reference_is_bound = false;
  std::optional<std::int64_t> recomputed;
  CellStatus status = CellStatus::not_listed;
  /// Collection rows: prefix sum over k = 2..n of the single-representation
  /// reference row, when every summand is listed.
  std::optional<std::int64_t> reference_prefix;

  bool reference_inconsistent() const {
    return reference && reference_prefix && !reference_is_bound && *reference != *reference_prefix;
  }
};

struct TableRow {
  std::string key;    // citation key, e.g. "T2.TR0"
  std::string label;  // row heading
  std::vector<TableCell> cells;
};

struct ComplexityTable {
  int index = 0;
  std::string title;
  std::vector<int> orders;
  std::vector<TableRow> rows;

  /// One line per mismatching or bound-violating cell, then one per
  /// collection cell whose reference disagrees with its reference prefix sum.
  std::vector<std::string> flags() const;
};

/// Frame sums available for recomputing the L_F row, keyed by order.
using FrameSums = std::map<int, BasicLinearCombination>;

/// Builds table 1..6: the shipped reference values next to values
/// recomputed from the builders wherever the budget allows. Tables 4-6
/// recompute the tree rows as prefix sums over k = 2..n.
ComplexityTable build_table(int index, const FrameSums& frames = {});

std::string render_markdown(const ComplexityTable& table);
std::string render_csv(const ComplexityTable& table);
nlohmann::json table_to_json(const ComplexityTable& table);

}  // namespace mayer
