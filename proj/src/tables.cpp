#include "mayer/tables.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mayer/criteria.hpp"
#include "mayer/trees.hpp"

namespace mayer {

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "mismatch";
    case CellStatus::within_bound: return "within-bound";
    case CellStatus::bound_violated: return "bound-violated";
    case CellStatus::reference_only: return "reference-only";
    case CellStatus::not_listed: return "not-listed";
  }
  return "unknown";
}

namespace {

enum class Rep { tree_b, tree_a, frame, ree_hoover };

// Largest order whose enumerated representation is built for a table cell.
constexpr int kTableTreeOrder = 7;
constexpr int kTableReeHooverOrder = kMaxReeHooverOrder;

using Values = std::vector<std::optional<std::int64_t>>;
constexpr std::nullopt_t na = std::nullopt;

struct RowSpec {
  Rep rep;
  bool collection;  // prefix sum over k = 2..n
  Values reference;
  int bound_at = 0;  // order whose reference value is an upper bound
};

struct TableSpec {
  std::string title;
  int criterion;
  int max_order;
  std::vector<RowSpec> rows;
};

const TableSpec& spec_for(int index) {
  static const std::array<TableSpec, 6> specs = [] {
    const Values tr1{1, 2, 5, 14, 44, 157, 634, 2852, 14047};
    const Values tr01{1, 1, 2, 5, 15, 55, 239, 1169, 6213};
    const Values f1{1, 1, 5, 49, 784, na, na, na, na};
    const Values rh1{1, 1, 2, 5, 23, 171, 2606, 81564, 4980756};
    const Values f2{1, 3, 26, na, na};
    const Values rh2{1, 3, 12, 50, 345};
    const Values f3{0, 1, 11, na, na};
    const Values rh3{0, 1, 6, 30, 230};
    return std::array<TableSpec, 6>{
        TableSpec{"Complexity by criterion Cr1", 1, 10,
                  {{Rep::tree_b, false, tr1},
                   {Rep::tree_a, false, tr01},
                   {Rep::frame, false, f1},
                   {Rep::ree_hoover, false, rh1}}},
        TableSpec{"Complexity by criterion Cr2", 2, 6,
                  {{Rep::tree_b, false, {1, 5, 23, 93, 403}},
                   {Rep::tree_a, false, {1, 3, 11, 42, 172}},
                   {Rep::frame, false, f2},
                   {Rep::ree_hoover, false, rh2}}},
        TableSpec{"Complexity by criterion Cr3", 3, 6,
                  {{Rep::tree_b, false, {0, 1, 8, 37, 183}},
                   {Rep::tree_a, false, {0, 1, 8, 38, 167}},
                   {Rep::frame, false, f3},
                   {Rep::ree_hoover, false, rh3}}},
        TableSpec{"Complexity of collections by criterion Cr'1", 1, 10,
                  {{Rep::tree_b, true, {1, 3, 8, 22, 66, 223, 857, 3709, 17056}},
                   {Rep::tree_a, true, {1, 2, 4, 9, 24, 79, 318, 1487, 7700}},
                   {Rep::frame, false, f1},
                   {Rep::ree_hoover, false, rh1}}},
        TableSpec{"Complexity of collections by criterion Cr'2", 2, 6,
                  {{Rep::tree_b, true, {1, 6, 28, 121, 524}},
                   {Rep::tree_a, true, {1, 4, 15, 57, 229}},
                   {Rep::frame, false, f2},
                   {Rep::ree_hoover, false, rh2}}},
        TableSpec{"Complexity of collections by criterion Cr'3", 3, 7,
                  {{Rep::tree_b, true, {0, 1, 9, 45, 228, 2247}, 7},
                   {Rep::tree_a, true, {0, 1, 7, 28, 125, 612}},
                   {Rep::frame, false, {0, 1, 11, na, na, na}},
                   {Rep::ree_hoover, false, {0, 1, 6, 30, 230, 2565}}}},
    };
  }();
  return specs.at(index - 1);
}

std::string rep_key(Rep rep) {
  switch (rep) {
    case Rep::tree_b: return "TR";
    case Rep::tree_a: return "TR0";
    case Rep::frame: return "F";
    case Rep::ree_hoover: return "RH";
  }
  return "?";
}

std::string row_label(const RowSpec& row, int criterion) {
  const std::string cr = (row.collection ? "Cr'" : "Cr") + std::to_string(criterion);
  std::string target;
  switch (row.rep) {
    case Rep::tree_b: target = "L_TR"; break;
    case Rep::tree_a: target = "L_TR0"; break;
    case Rep::frame: target = "L_F"; break;
    case Rep::ree_hoover: target = "L_RH"; break;
  }
  return cr + "(" + target + (row.collection ? "(2..n))" : "(n))");
}

class ScoreCache {
 public:
  explicit ScoreCache(const FrameSums& frames) : frames_(frames) {}

  std::optional<std::int64_t> score(Rep rep, int n, int criterion) {
    if (criterion == 1 && (rep == Rep::tree_b || rep == Rep::tree_a)) {
      const Integer c = rep == Rep::tree_b ? count_tr(n) : count_tr0(n);
      return c.convert_to<std::int64_t>();
    }
    const auto* r = report(rep, n);
    if (!r) return std::nullopt;
    return criterion_value(*r, criterion);
  }

 private:
  const ComplexityReport* report(Rep rep, int n) {
    const auto key = std::make_pair(rep, n);
    if (auto it = reports_.find(key); it != reports_.end()) return it->second ? &*it->second : nullptr;
    std::optional<ComplexityReport> r;
    switch (rep) {
      case Rep::tree_b:
        if (n <= kTableTreeOrder) r = complexity_report(tree_sum_bn_blc(n));
        break;
      case Rep::tree_a:
        if (n <= kTableTreeOrder) r = complexity_report(tree_sum_an_blc(n));
        break;
      case Rep::ree_hoover:
        if (n <= kTableReeHooverOrder) r = complexity_report(ree_hoover_blc(n));
        break;
      case Rep::frame:
        if (auto it = frames_.find(n); it != frames_.end()) r = complexity_report(it->second);
        break;
    }
    auto& slot = reports_[key] = std::move(r);
    return slot ? &*slot : nullptr;
  }

  const FrameSums& frames_;
  std::map<std::pair<Rep, int>, std::optional<ComplexityReport>> reports_;
};

CellStatus classify(const TableCell& c) {
  if (!c.reference) return CellStatus::not_listed;
  if (!c.recomputed) return CellStatus::reference_only;
  if (c.reference_is_bound)
    return *c.recomputed < *c.reference ? CellStatus::within_bound : CellStatus::bound_violated;
  return *c.recomputed == *c.reference ? CellStatus::match : CellStatus::mismatch;
}

std::string reference_text(const TableCell& c) {
  if (!c.reference) return "-";
  return (c.reference_is_bound ? "< " : "") + std::to_string(*c.reference);
}

std::string recomputed_text(const TableCell& c) {
  if (!c.recomputed) return "-";
  std::string s = std::to_string(*c.recomputed);
  if (c.status == CellStatus::mismatch || c.status == CellStatus::bound_violated) s += " (!)";
  return s;
}

}  // namespace

ComplexityTable build_table(int index, const FrameSums& frames) {
  if (index < 1 || index > 6) throw ValidationError("table index must be 1..6");
  for (const auto& [n, blc] : frames)
    if (blc.order() != n) throw ValidationError("frame sum keyed by the wrong order");
  const TableSpec& spec = spec_for(index);
  ScoreCache cache(frames);
  ComplexityTable table;
  table.index = index;
  table.title = spec.title;
  for (int n = 2; n <= spec.max_order; ++n) table.orders.push_back(n);

  for (const RowSpec& row : spec.rows) {
    TableRow out;
    out.key = "T" + std::to_string(index) + "." + rep_key(row.rep);
    out.label = row_label(row, spec.criterion);
    for (int n : table.orders) {
      TableCell cell;
      cell.n = n;
      const std::size_t slot = static_cast<std::size_t>(n - 2);
      if (slot < row.reference.size()) cell.reference = row.reference[slot];
      cell.reference_is_bound = n == row.bound_at;
      if (row.collection) {
        const Values& single = spec_for(index - 3).rows[&row - spec.rows.data()].reference;
        std::int64_t listed = 0;
        bool all_listed = true;
        for (int k = 2; k <= n && all_listed; ++k) {
          const std::size_t i = static_cast<std::size_t>(k - 2);
          all_listed = i < single.size() && single[i].has_value();
          if (all_listed) listed += *single[i];
        }
        if (all_listed) cell.reference_prefix = listed;
        std::int64_t sum = 0;
        bool complete = true;
        for (int k = 2; k <= n && complete; ++k) {
          const auto s = cache.score(row.rep, k, spec.criterion);
          complete = s.has_value();
          if (s) sum += *s;
        }
        if (complete) cell.recomputed = sum;
      } else {
        cell.recomputed = cache.score(row.rep, n, spec.criterion);
      }
      cell.status = classify(cell);
      out.cells.push_back(cell);
    }
    table.rows.push_back(std::move(out));
  }
  return table;
}

std::vector<std::string> ComplexityTable::flags() const {
  std::vector<std::string> out;
  for (const auto& row : rows)
    for (const auto& c : row.cells)
      if (c.status == CellStatus::mismatch || c.status == CellStatus::bound_violated)
        out.push_back(row.key + " n=" + std::to_string(c.n) + ": recomputed " +
                      std::to_string(*c.recomputed) + ", reference " + reference_text(c) + " (" +
                      to_string(c.status) + ")");
  for (const auto& row : rows)
    for (const auto& c : row.cells)
      if (c.reference_inconsistent())
        out.push_back(row.key + " n=" + std::to_string(c.n) + ": reference " +
                      std::to_string(*c.reference) + " is not the prefix sum " +
                      std::to_string(*c.reference_prefix) + " of the single-representation reference row");
  return out;
}

std::string render_markdown(const ComplexityTable& table) {
  std::ostringstream os;
  os << "## Table " << table.index << ": " << table.title << "\n\n| row | values |";
  for (int n : table.orders) os << " n=" << n << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < table.orders.size(); ++i) os << "---:|";
  os << "\n";
  for (const auto& row : table.rows) {
    os << "| " << row.label << " [" << row.key << "] | reference |";
    for (const auto& c : row.cells) os << " " << reference_text(c) << " |";
    os << "\n|  | recomputed |";
    for (const auto& c : row.cells) os << " " << recomputed_text(c) << " |";
    os << "\n";
    const bool collection = std::any_of(row.cells.begin(), row.cells.end(),
                                        [](const TableCell& c) { return c.reference_prefix.has_value(); });
    if (collection) {
      os << "|  | reference prefix sum |";
      for (const auto& c : row.cells) {
        os << " ";
        if (c.reference_prefix)
          os << *c.reference_prefix << (c.reference_inconsistent() ? " (!)" : "");
        else
          os << "-";
        os << " |";
      }
      os << "\n";
    }
  }
  const auto flags = table.flags();
  os << "\nFlags:";
  if (flags.empty()) os << " none";
  os << "\n";
  for (const auto& f : flags) os << "- " << f << "\n";
  return os.str();
}

std::string render_csv(const ComplexityTable& table) {
  std::ostringstream os;
  os << "table,key,row,n,reference,recomputed,status,reference_prefix\n";
  for (const auto& row : table.rows)
    for (const auto& c : row.cells) {
      os << table.index << "," << row.key << ",\"" << row.label << "\"," << c.n << ",";
      if (c.reference) os << (c.reference_is_bound ? "<" : "") << *c.reference;
      os << ",";
      if (c.recomputed) os << *c.recomputed;
      os << "," << to_string(c.status) << ",";
      if (c.reference_prefix) os << *c.reference_prefix;
      os << "\n";
    }
  return os.str();
}

nlohmann::json table_to_json(const ComplexityTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : row.cells)
      cells.push_back({{"n", c.n},
                       {"reference", c.reference ? nlohmann::json(*c.reference) : nlohmann::json()},
                       {"reference_is_bound", c.reference_is_bound},
                       {"recomputed", c.recomputed ? nlohmann::json(*c.recomputed) : nlohmann::json()},
                       {"status", to_string(c.status)},
                       {"reference_prefix",
                        c.reference_prefix ? nlohmann::json(*c.reference_prefix) : nlohmann::json()},
                       {"reference_inconsistent", c.reference_inconsistent()}});
    rows.push_back({{"key", row.key}, {"label", row.label}, {"cells", cells}});
  }
  return {{"table", table.index},
          {"title", table.title},
          {"orders", table.orders},
          {"rows", rows},
          {"flags", table.flags()}};
}

}  // namespace mayer
