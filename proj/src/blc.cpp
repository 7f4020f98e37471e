#include "mayer/blc.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "mayer/trees.hpp"

namespace mayer {

BasicLinearCombination::BasicLinearCombination(int order, Rational prefactor,
                                               std::string provenance)
    : order_(order), prefactor_(std::move(prefactor)), provenance_(std::move(provenance)) {
  if (order < 2 || order > kMaxOrder)
    throw ValidationError("linear combination order " + std::to_string(order) +
                          " outside 2.." + std::to_string(kMaxOrder));
}

void BasicLinearCombination::add(Rational coefficient, MarkedGraph graph) {
  if (graph.order() != order_)
    throw ValidationError("term of order " + std::to_string(graph.order()) +
                          " added to a combination of order " + std::to_string(order_));
  if (!graph.is_basic())
    throw ValidationError("term is not basic: " + format_graph(graph));
  terms_.push_back(Term{std::move(coefficient), graph});
}

namespace {

void check_order(int n, int limit, const char* what) {
  if (n < 2 || n > limit)
    throw BudgetError(std::string(what) + " supports 2 <= n <= " + std::to_string(limit) +
                      ", got " + std::to_string(n));
}

Rational inverse_factorial(int n) { return Rational(Integer(1), factorial(n)); }

Rational block_prefactor(int n) { return Rational(Integer(-(n - 1)), factorial(n)); }

BasicLinearCombination tree_sum(int n, bool restrict_to_zero, const char* tag) {
  check_order(n, kMaxTreeSumOrder, tag);
  BasicLinearCombination out(n, inverse_factorial(n), tag);
  for (const auto& c : enumerate_tr(n)) {
    if (restrict_to_zero && !in_t_n0(c.tree)) continue;
    out.add(Rational(c.size), marked_graph(c.tree, c.ad));
  }
  return out;
}

}  // namespace

BasicLinearCombination mayer_bn_blc(int n) {
  check_order(n, kMaxGraphSumOrder, "mayer_bn");
  BasicLinearCombination out(n, inverse_factorial(n), "mayer_bn");
  const EdgeMask full = all_pairs(n);
  for (EdgeMask s = 0; s <= full; ++s)
    if (is_connected(n, s)) out.add(1, MarkedGraph(n, s));
  return out;
}

BasicLinearCombination virial_block_blc(int n) {
  check_order(n, kMaxGraphSumOrder, "virial_blocks");
  BasicLinearCombination out(n, block_prefactor(n), "virial_blocks");
  const EdgeMask full = all_pairs(n);
  for (EdgeMask s = 0; s <= full; ++s)
    if (is_biconnected(n, s)) out.add(1, MarkedGraph(n, s));
  return out;
}

BasicLinearCombination tree_sum_bn_blc(int n) { return tree_sum(n, false, "tree_bn"); }

BasicLinearCombination tree_sum_an_blc(int n) { return tree_sum(n, true, "tree_an"); }

BasicLinearCombination tree_sum_all_blc(int n) {
  check_order(n, kMaxTreeEnumeration, "tree_all");
  BasicLinearCombination out(n, inverse_factorial(n), "tree_all");
  for_each_tree(n, [&](const RootedLabeledTree& t) {
    out.add(1, marked_graph(t, admissible_edges(t)));
  });
  return out;
}

std::vector<std::int32_t> ree_hoover_coefficients(int n) {
  check_order(n, kMaxReeHooverOrder, "ree_hoover");
  const int p = pair_count(n);
  const std::size_t size = std::size_t{1} << p;
  std::vector<std::int32_t> c(size);
  for (std::size_t s = 0; s < size; ++s) c[s] = is_biconnected(n, static_cast<EdgeMask>(s));
  // c(E) <- sum_{F subset E} (-1)^{|E \ F|} c(F), one edge slot at a time.
  for (int bit = 0; bit < p; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t s = 0; s < size; ++s)
      if (s & step) c[s] -= c[s ^ step];
  }
  return c;
}

std::vector<ReeHooverClass> ree_hoover_classes(int n) {
  const auto c = ree_hoover_coefficients(n);
  const RelabelingTable perms(n, false);
  std::vector<bool> seen(c.size(), false);
  std::vector<ReeHooverClass> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s] == 0 || seen[s]) continue;
    ReeHooverClass cls{static_cast<EdgeMask>(s), c[s], 0};
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const EdgeMask image = perms.apply(k, static_cast<EdgeMask>(s));
      if (c[image] != cls.weight)
        throw std::logic_error("Ree-Hoover weight is not relabeling invariant");
      if (seen[image]) continue;
      seen[image] = true;
      ++cls.members;
      cls.mayer = std::min(cls.mayer, image);
    }
    out.push_back(cls);
  }
  std::sort(out.begin(), out.end(),
            [](const ReeHooverClass& a, const ReeHooverClass& b) { return a.mayer < b.mayer; });
  return out;
}

BasicLinearCombination ree_hoover_blc(int n) {
  BasicLinearCombination out(n, block_prefactor(n), "ree_hoover");
  const EdgeMask full = all_pairs(n);
  for (const auto& cls : ree_hoover_classes(n))
    out.add(Rational(cls.weight * cls.members), MarkedGraph(n, cls.mayer, full & ~cls.mayer));
  return out;
}

BasicLinearCombination ree_hoover_labeled_blc(int n) {
  const auto c = ree_hoover_coefficients(n);
  BasicLinearCombination out(n, block_prefactor(n), "ree_hoover_labeled");
  const EdgeMask full = all_pairs(n);
  for (std::size_t s = 0; s < c.size(); ++s)
    if (c[s] != 0) out.add(c[s], MarkedGraph(n, s, full & ~s));
  return out;
}

BasicLinearCombination load_frame_sum(const FrameSumRecord& record) {
  const int n = record.order;
  if (n < 2 || n > kMaxOrder)
    throw ValidationError("frame sum order " + std::to_string(n) + " outside 2.." +
                          std::to_string(kMaxOrder));
  BasicLinearCombination out(n, block_prefactor(n), "frame_sum");
  for (std::size_t k = 0; k < record.ensembles.size(); ++k) {
    const auto [s, ad] = record.ensembles[k];
    const std::string where = "frame ensemble " + std::to_string(k + 1) + ": ";
    if ((s | ad) & ~all_pairs(n))
      throw ValidationError(where + "edge outside V_" + std::to_string(n));
    if (!is_biconnected(n, s))
      throw ValidationError(where + "cycle union " + format_edges(s) + " is not biconnected on V_" +
                            std::to_string(n));
    if (s & ad)
      throw ValidationError(where + "admissible set shares edges " + format_edges(s & ad) +
                            " with the cycle union");
    out.add(1, MarkedGraph(n, s, ad));
  }
  return out;
}

FrameSumRecord parse_frame_sum(const std::string& text) {
  FrameSumRecord record;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      const auto fields = parse_fields(line);
      for (const auto& [key, value] : fields)
        if (key != "n" && key != "s" && key != "ad")
          throw ValidationError("unknown field '" + key + "'");
      if (!fields.contains("n") || !fields.contains("s"))
        throw ValidationError("record needs n= and s=");
      const int n = parse_int(fields.at("n"));
      if (record.order == 0) record.order = n;
      if (n != record.order)
        throw ValidationError("order " + std::to_string(n) + " differs from earlier records (" +
                              std::to_string(record.order) + ")");
      const auto ad = fields.find("ad");
      record.ensembles.emplace_back(parse_edges(fields.at("s")),
                                    ad == fields.end() ? 0 : parse_edges(ad->second));
    } catch (const ValidationError& e) {
      throw ValidationError("frame record line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (record.ensembles.empty()) throw ValidationError("frame record contains no ensembles");
  return record;
}

std::string format_frame_sum(const FrameSumRecord& record) {
  std::string out;
  for (const auto& [s, ad] : record.ensembles)
    out += "n=" + std::to_string(record.order) + "; s=" + format_edges(s) +
           "; ad=" + format_edges(ad) + "\n";
  return out;
}

namespace {

using nlohmann::json;

json rational_json(const Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Rational rational_from(const json& j) {
  auto part = [&](const char* key) -> Integer {
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Integer(v.get<long long>());
    return Integer(v.get<std::string>());
  };
  const Integer den = part("den");
  if (den == 0) throw ValidationError("zero denominator in rational");
  return Rational(part("num"), den);
}

json edges_json(EdgeMask m) {
  json out = json::array();
  for (const auto& e : edges_of(m)) out.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  return out;
}

EdgeMask edges_from(const json& j) {
  std::string joined;
  for (const auto& item : j) {
    if (!joined.empty()) joined += ',';
    joined += item.get<std::string>();
  }
  return parse_edges(joined);
}

}  // namespace

std::string blc_to_json(const BasicLinearCombination& blc, int indent) {
  json terms = json::array();
  for (const auto& t : blc.terms())
    terms.push_back({{"coeff", rational_json(t.coefficient)},
                     {"f", edges_json(t.graph.mayer())},
                     {"ft", edges_json(t.graph.boltzmann())}});
  json out = {{"order", blc.order()},
              {"prefactor", rational_json(blc.prefactor())},
              {"provenance", blc.provenance()},
              {"terms", std::move(terms)}};
  return out.dump(indent);
}

BasicLinearCombination blc_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const int n = j.at("order").get<int>();
    BasicLinearCombination out(n, rational_from(j.at("prefactor")),
                               j.value("provenance", std::string("custom")));
    for (const auto& t : j.at("terms")) {
      const EdgeMask ft = t.contains("ft") ? edges_from(t.at("ft")) : 0;
      out.add(rational_from(t.at("coeff")), MarkedGraph(n, edges_from(t.at("f")), ft));
    }
    return out;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed linear combination JSON: ") + e.what());
  }
}

}  // namespace mayer
